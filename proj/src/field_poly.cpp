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

#include "dedekind/field_poly.hpp"

#include <algorithm>

#include "dedekind/error.hpp"
#include "dedekind/term_format.hpp"

namespace dedekind {

using Elem = FiniteField::Elem;

FieldPoly FieldPolyRing::one() const
{
    return FieldPoly{{F_->one()}};
}

FieldPoly FieldPolyRing::x() const
{
    return FieldPoly{{F_->zero(), F_->one()}};
}

FieldPoly FieldPolyRing::constant(const Elem& c) const
{
    FieldPoly a{{c}};
    normalize(a);
    return a;
}

FieldPoly FieldPolyRing::monomial(const Elem& c, std::size_t k) const
{
    if (F_->is_zero(c))
        return {};
    FieldPoly a;
    a.coeffs.assign(k + 1, F_->zero());
    a.coeffs[k] = c;
    return a;
}

FieldPoly FieldPolyRing::from_coeffs(std::vector<Elem> coeffs) const
{
    FieldPoly a{std::move(coeffs)};
    normalize(a);
    return a;
}

void FieldPolyRing::normalize(FieldPoly& a) const
{
    while (!a.coeffs.empty() && F_->is_zero(a.coeffs.back()))
        a.coeffs.pop_back();
}

const Elem& FieldPolyRing::lc(const FieldPoly& a) const
{
    if (a.coeffs.empty())
        internal_error("leading coefficient of the zero polynomial");
    return a.coeffs.back();
}

bool FieldPolyRing::is_one(const FieldPoly& a) const
{
    return a.coeffs.size() == 1 && F_->is_one(a.coeffs[0]);
}

bool FieldPolyRing::is_monic(const FieldPoly& a) const
{
    return !a.coeffs.empty() && F_->is_one(a.coeffs.back());
}

FieldPoly FieldPolyRing::add(const FieldPoly& a, const FieldPoly& b) const
{
    const FieldPoly& big = a.coeffs.size() >= b.coeffs.size() ? a : b;
    const FieldPoly& small = a.coeffs.size() >= b.coeffs.size() ? b : a;
    FieldPoly c = big;
    for (std::size_t i = 0; i < small.coeffs.size(); ++i)
        c.coeffs[i] = F_->add(c.coeffs[i], small.coeffs[i]);
    normalize(c);
    return c;
}

FieldPoly FieldPolyRing::sub(const FieldPoly& a, const FieldPoly& b) const
{
    return add(a, neg(b));
}

FieldPoly FieldPolyRing::neg(const FieldPoly& a) const
{
    FieldPoly c = a;
    for (auto& e : c.coeffs)
        e = F_->neg(e);
    return c;
}

FieldPoly FieldPolyRing::mul(const FieldPoly& a, const FieldPoly& b) const
{
    if (a.is_zero() || b.is_zero())
        return {};
    FieldPoly c;
    c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, F_->zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (F_->is_zero(a.coeffs[i]))
            continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c.coeffs[i + j] = F_->add(c.coeffs[i + j], F_->mul(a.coeffs[i], b.coeffs[j]));
    }
    normalize(c);
    return c;
}

FieldPoly FieldPolyRing::scale(const FieldPoly& a, const Elem& c) const
{
    if (F_->is_zero(c))
        return {};
    FieldPoly r = a;
    for (auto& e : r.coeffs)
        e = F_->mul(e, c);
    return r;
}

FieldPoly FieldPolyRing::pow(const FieldPoly& a, unsigned n) const
{
    FieldPoly result = one();
    FieldPoly base = a;
    while (n != 0) {
        if (n & 1U)
            result = mul(result, base);
        n >>= 1U;
        if (n != 0)
            base = mul(base, base);
    }
    return result;
}

FieldPoly FieldPolyRing::make_monic(const FieldPoly& a) const
{
    if (a.is_zero())
        return a;
    return scale(a, F_->inv(lc(a)));
}

FieldDivMod FieldPolyRing::divmod(const FieldPoly& a, const FieldPoly& b) const
{
    if (b.is_zero())
        internal_error("polynomial division by zero");
    FieldDivMod out;
    out.remainder = a;
    if (a.coeffs.size() < b.coeffs.size())
        return out;
    const std::size_t db = b.coeffs.size() - 1;
    const Elem lead_inv = F_->inv(lc(b));
    const bool monic = F_->is_one(lc(b));
    std::vector<Elem>& r = out.remainder.coeffs;
    out.quotient.coeffs.assign(r.size() - db, F_->zero());
    for (std::size_t k = r.size(); k-- > db;) {
        if (F_->is_zero(r[k]))
            continue;
        Elem q = monic ? r[k] : F_->mul(r[k], lead_inv);
        out.quotient.coeffs[k - db] = q;
        for (std::size_t i = 0; i <= db; ++i)
            r[k - db + i] = F_->sub(r[k - db + i], F_->mul(q, b.coeffs[i]));
    }
    normalize(out.quotient);
    normalize(out.remainder);
    return out;
}

FieldPoly FieldPolyRing::rem(const FieldPoly& a, const FieldPoly& b) const
{
    return divmod(a, b).remainder;
}

FieldPoly FieldPolyRing::quo(const FieldPoly& a, const FieldPoly& b) const
{
    return divmod(a, b).quotient;
}

FieldPoly FieldPolyRing::divexact(const FieldPoly& a, const FieldPoly& b) const
{
    FieldDivMod qr = divmod(a, b);
    if (!qr.remainder.is_zero())
        internal_error("inexact polynomial division");
    return qr.quotient;
}

FieldPoly FieldPolyRing::gcd(const FieldPoly& a, const FieldPoly& b) const
{
    FieldPoly u = a;
    FieldPoly v = b;
    while (!v.is_zero()) {
        FieldPoly r = rem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return make_monic(u);
}

FieldXgcd FieldPolyRing::xgcd(const FieldPoly& a, const FieldPoly& b) const
{
    FieldPoly r0 = a, r1 = b;
    FieldPoly s0 = one(), s1 = zero();
    FieldPoly t0 = zero(), t1 = one();
    while (!r1.is_zero()) {
        FieldDivMod qr = divmod(r0, r1);
        FieldPoly s2 = sub(s0, mul(qr.quotient, s1));
        FieldPoly t2 = sub(t0, mul(qr.quotient, t1));
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    Elem inv = F_->inv(lc(r0));
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

FieldPoly FieldPolyRing::mulmod(const FieldPoly& a, const FieldPoly& b, const FieldPoly& m) const
{
    return rem(mul(a, b), m);
}

FieldPoly FieldPolyRing::powmod(const FieldPoly& a, const mpz_class& n, const FieldPoly& m) const
{
    if (n < 0)
        internal_error("negative exponent in powmod");
    FieldPoly result = rem(one(), m);
    FieldPoly base = rem(a, m);
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(n.get_mpz_t(), i))
            result = mulmod(result, base, m);
    }
    return result;
}

FieldPoly FieldPolyRing::derivative(const FieldPoly& a) const
{
    FieldPoly d;
    if (a.coeffs.size() <= 1)
        return d;
    d.coeffs.reserve(a.coeffs.size() - 1);
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
        Elem k = F_->from_integer(static_cast<long long>(i % F_->characteristic()));
        d.coeffs.push_back(F_->mul(a.coeffs[i], k));
    }
    normalize(d);
    return d;
}

FieldPoly FieldPolyRing::pth_root(const FieldPoly& a) const
{
    const std::size_t p = F_->characteristic();
    FieldPoly r;
    if (a.is_zero())
        return r;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i % p != 0 && !F_->is_zero(a.coeffs[i]))
            internal_error("pth_root of a polynomial with nonzero derivative");
    }
    for (std::size_t i = 0; i < a.coeffs.size(); i += p)
        r.coeffs.push_back(F_->pth_root(a.coeffs[i]));
    normalize(r);
    return r;
}

Elem FieldPolyRing::evaluate(const FieldPoly& a, const Elem& x) const
{
    Elem acc = F_->zero();
    for (std::size_t i = a.coeffs.size(); i-- > 0;)
        acc = F_->add(F_->mul(acc, x), a.coeffs[i]);
    return acc;
}

int FieldPolyRing::compare(const FieldPoly& a, const FieldPoly& b) const
{
    if (a.coeffs.size() != b.coeffs.size())
        return a.coeffs.size() < b.coeffs.size() ? -1 : 1;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        int c = F_->compare(a.coeffs[i], b.coeffs[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

std::string FieldPolyRing::to_string(const FieldPoly& a, const std::string& var) const
{
    std::vector<Term> terms;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        if (F_->is_zero(a.coeffs[i]))
            continue;
        terms.push_back(Term{F_->to_string(a.coeffs[i]), false, i});
    }
    return format_terms(terms, var);
}

} // namespace dedekind
