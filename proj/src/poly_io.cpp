/*
   Copyright 2026 The dedekind Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dedekind/poly_io.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/term_format.hpp"

namespace dedekind {
namespace {

[[noreturn]] void fail(std::size_t pos, const std::string& msg)
{
    throw Error(ErrorCode::syntax_error, "syntax error at column " + std::to_string(pos + 1) + ": " + msg);
}

/* Recursive-descent evaluator. A supplies
 *   V constant(const mpz_class&), std::optional<V> variable(char),
 *   V add(V, V), V sub(V, V), V mul(V, V), V neg(V), V one(),
 *   std::string unavailable(char).
 */
template <class A>
class Parser {
public:
    using V = typename A::Value;

    Parser(const A& ring, std::string_view text) : ring_(ring), s_(text) {}

    V parse()
    {
        skip();
        if (pos_ == s_.size())
            fail(pos_, "empty expression");
        V v = expr();
        if (pos_ != s_.size())
            unexpected();
        return v;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }

    [[noreturn]] void unexpected() const
    {
        if (pos_ >= s_.size())
            fail(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
            fail(pos_, std::string("unexpected '") + c + "' (implicit multiplication is not allowed)");
        fail(pos_, std::string("unexpected '") + c + "'");
    }

    V expr()
    {
        V acc = eat('-') ? ring_.neg(term()) : term();
        for (;;) {
            if (eat('+'))
                acc = ring_.add(acc, term());
            else if (eat('-'))
                acc = ring_.sub(acc, term());
            else
                return acc;
        }
    }

    V term()
    {
        V acc = power();
        while (eat('*'))
            acc = ring_.mul(acc, power());
        return acc;
    }

    V power()
    {
        V b = atom();
        if (!eat('^'))
            return b;
        const std::size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty())
            fail(start, "exponent must be a nonnegative integer literal");
        if (digits.size() > 6 || std::stoul(digits) > max_exponent)
            fail(start, "exponent exceeds " + std::to_string(max_exponent));
        skip();
        unsigned n = static_cast<unsigned>(std::stoul(digits));
        V r = ring_.one();
        for (; n > 0; n >>= 1U) {
            if (n & 1U)
                r = ring_.mul(r, b);
            if (n > 1)
                b = ring_.mul(b, b);
        }
        return r;
    }

    V atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            skip();
            return ring_.constant(mpz_class(digits, 10));
        }
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')'))
                pos_ >= s_.size() ? fail(pos_, "missing ')'") : unexpected();
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const bool single = pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]));
            if (single) {
                if (auto v = ring_.variable(c)) {
                    ++pos_;
                    skip();
                    return *v;
                }
                if (c == 'x' || c == 't' || c == 'z')
                    fail(pos_, ring_.unavailable(c));
            }
            std::size_t end = pos_;
            while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end])))
                ++end;
            fail(pos_, "unknown identifier '" + std::string(s_.substr(pos_, end - pos_)) + "'");
        }
        unexpected();
    }

    const A& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <ValuedRing B>
class XAdapter {
public:
    using Value = Poly<typename B::Elem>;
    using Scalar = std::optional<typename B::Elem>;

    explicit XAdapter(const B& base) : base_(base), R_(base) {}

    Value one() const { return R_.one(); }
    Value add(const Value& a, const Value& b) const { return R_.add(a, b); }
    Value sub(const Value& a, const Value& b) const { return R_.sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return R_.mul(a, b); }
    Value neg(const Value& a) const { return R_.neg(a); }

    Value constant(const mpz_class& n) const { return R_.constant(scalar(n)); }

    std::optional<Value> variable(char c) const
    {
        if (c == 'x')
            return R_.x();
        if (auto s = named_scalar(c))
            return R_.constant(*s);
        return std::nullopt;
    }

    std::string unavailable(char c) const
    {
        if (c == 't')
            return "variable 't' is only available over F_q(t)";
        return "'z' denotes the generator of F_q and needs e > 1";
    }

private:
    typename B::Elem scalar(const mpz_class& n) const;
    Scalar named_scalar(char c) const;

    const B& base_;
    PolyRing<B> R_;
};

template <>
mpz_class XAdapter<IntegerBase>::scalar(const mpz_class& n) const
{
    return n;
}

template <>
XAdapter<IntegerBase>::Scalar XAdapter<IntegerBase>::named_scalar(char) const
{
    return std::nullopt;
}

template <>
FieldPoly XAdapter<FunctionBase>::scalar(const mpz_class& n) const
{
    return base_.t_ring().constant(base_.constant_field().from_mpz(n));
}

template <>
XAdapter<FunctionBase>::Scalar XAdapter<FunctionBase>::named_scalar(char c) const
{
    if (c == 't')
        return base_.t();
    const auto& Fq = base_.constant_field();
    if (c == 'z' && !Fq.is_prime_field())
        return base_.t_ring().constant(Fq.generator_element());
    return std::nullopt;
}

class TAdapter {
public:
    using Value = FieldPoly;

    explicit TAdapter(const FiniteField& Fq) : Fq_(Fq), R_(Fq) {}

    Value one() const { return R_.one(); }
    Value add(const Value& a, const Value& b) const { return R_.add(a, b); }
    Value sub(const Value& a, const Value& b) const { return R_.sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return R_.mul(a, b); }
    Value neg(const Value& a) const { return R_.neg(a); }
    Value constant(const mpz_class& n) const { return R_.constant(Fq_.from_mpz(n)); }

    std::optional<Value> variable(char c) const
    {
        if (c == 't')
            return R_.x();
        if (c == 'z' && !Fq_.is_prime_field())
            return R_.constant(Fq_.generator_element());
        return std::nullopt;
    }

    std::string unavailable(char c) const
    {
        if (c == 'x')
            return "the place must be a polynomial in t";
        return "'z' denotes the generator of F_q and needs e > 1";
    }

private:
    const FiniteField& Fq_;
    FieldPolyRing R_;
};

} // namespace

Poly<mpz_class> parse_poly(const IntegerBase& base, std::string_view text)
{
    XAdapter<IntegerBase> a(base);
    return Parser(a, text).parse();
}

Poly<FieldPoly> parse_poly(const FunctionBase& base, std::string_view text)
{
    XAdapter<FunctionBase> a(base);
    return Parser(a, text).parse();
}

FieldPoly parse_tpoly(const FiniteField& Fq, std::string_view text)
{
    TAdapter a(Fq);
    return Parser(a, text).parse();
}

std::string format_poly(const IntegerBase& base, const Poly<mpz_class>& p)
{
    std::vector<Term> terms;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        if (base.is_zero(p.coeffs[i]))
            continue;
        auto [neg, mag] = base.signed_magnitude(p.coeffs[i]);
        terms.push_back(Term{std::move(mag), neg, i});
    }
    return format_terms(terms, "x");
}

std::string format_poly(const FunctionBase& base, const Poly<FieldPoly>& p)
{
    std::vector<Term> terms;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        if (base.is_zero(p.coeffs[i]))
            continue;
        terms.push_back(Term{base.to_string(p.coeffs[i]), false, i});
    }
    return format_terms(terms, "x");
}

} // namespace dedekind
