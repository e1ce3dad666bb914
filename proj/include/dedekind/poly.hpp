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

#ifndef DEDEKIND_POLY_HPP
#define DEDEKIND_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dedekind/base.hpp"
#include "dedekind/degree.hpp"
#include "dedekind/error.hpp"
#include "dedekind/field_poly.hpp"

namespace dedekind {

/* Dense polynomial in x over a base ring, lowest degree first, no trailing
 * zeros. The zero polynomial is empty and has degree minus infinity.
 */
template <class E>
struct Poly {
    std::vector<E> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }
    Degree degree() const noexcept
    {
        return coeffs.empty() ? Degree::minus_infinity() : Degree(coeffs.size() - 1);
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// A polynomial with leading coefficient 1; checked on construction.
template <class E>
class MonicPoly {
public:
    template <ValuedRing B>
    static MonicPoly checked(const B& base, Poly<E> p)
    {
        if (p.coeffs.empty() || !base.is_one(p.coeffs.back()))
            throw Error(ErrorCode::not_monic, "polynomial is not monic");
        return MonicPoly(std::move(p));
    }

    const Poly<E>& poly() const noexcept { return p_; }
    std::size_t degree() const noexcept { return p_.coeffs.size() - 1; }

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

private:
    explicit MonicPoly(Poly<E> p) : p_(std::move(p)) {}
    Poly<E> p_;
};

template <class E>
struct DivMod {
    Poly<E> quotient;
    Poly<E> remainder;
};

/// Arithmetic in R_ν[x] for a valued base ring.
template <ValuedRing B>
class PolyRing {
public:
    using Elem = typename B::Elem;
    using P = Poly<Elem>;

    explicit PolyRing(const B& base) noexcept : base_(&base) {}

    const B& base() const noexcept { return *base_; }

    void normalize(P& a) const
    {
        while (!a.coeffs.empty() && base_->is_zero(a.coeffs.back()))
            a.coeffs.pop_back();
    }

    P make(std::vector<Elem> coeffs) const
    {
        P a{std::move(coeffs)};
        normalize(a);
        return a;
    }

    P zero() const { return {}; }
    P one() const { return P{{base_->one()}}; }
    P x() const { return P{{base_->zero(), base_->one()}}; }
    P constant(const Elem& c) const { return make({c}); }

    P monomial(const Elem& c, std::size_t k) const
    {
        if (base_->is_zero(c))
            return {};
        P a;
        a.coeffs.assign(k + 1, base_->zero());
        a.coeffs[k] = c;
        return a;
    }

    const Elem& lc(const P& a) const
    {
        if (a.coeffs.empty())
            internal_error("leading coefficient of the zero polynomial");
        return a.coeffs.back();
    }

    bool is_monic(const P& a) const { return !a.coeffs.empty() && base_->is_one(a.coeffs.back()); }

    P add(const P& a, const P& b) const
    {
        const P& big = a.coeffs.size() >= b.coeffs.size() ? a : b;
        const P& small = a.coeffs.size() >= b.coeffs.size() ? b : a;
        P c = big;
        for (std::size_t i = 0; i < small.coeffs.size(); ++i)
            c.coeffs[i] = base_->add(c.coeffs[i], small.coeffs[i]);
        normalize(c);
        return c;
    }

    P neg(const P& a) const
    {
        P c = a;
        for (auto& e : c.coeffs)
            e = base_->neg(e);
        normalize(c);
        return c;
    }

    P sub(const P& a, const P& b) const { return add(a, neg(b)); }

    P mul(const P& a, const P& b) const
    {
        if (a.is_zero() || b.is_zero())
            return {};
        P c;
        c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, base_->zero());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (base_->is_zero(a.coeffs[i]))
                continue;
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                c.coeffs[i + j] = base_->add(c.coeffs[i + j], base_->mul(a.coeffs[i], b.coeffs[j]));
        }
        normalize(c);
        return c;
    }

    P scale(const P& a, const Elem& c) const
    {
        P r = a;
        for (auto& e : r.coeffs)
            e = base_->mul(e, c);
        normalize(r);
        return r;
    }

    P divexact_scalar(const P& a, const Elem& c) const
    {
        P r = a;
        for (auto& e : r.coeffs)
            e = base_->divexact(e, c);
        return r;
    }

    P pow(const P& a, unsigned n) const
    {
        P result = one();
        P b = a;
        while (n != 0) {
            if (n & 1U)
                result = mul(result, b);
            n >>= 1U;
            if (n != 0)
                b = mul(b, b);
        }
        return result;
    }

    /// f = q·phi + r with deg r < deg phi; exact since phi is monic.
    DivMod<Elem> divmod_monic(const P& f, const P& phi) const
    {
        if (!is_monic(phi))
            throw Error(ErrorCode::not_monic, "divisor must be monic");
        DivMod<Elem> out;
        out.remainder = f;
        if (f.coeffs.size() < phi.coeffs.size())
            return out;
        const std::size_t dp = phi.coeffs.size() - 1;
        auto& r = out.remainder.coeffs;
        out.quotient.coeffs.assign(r.size() - dp, base_->zero());
        for (std::size_t k = r.size(); k-- > dp;) {
            if (base_->is_zero(r[k]))
                continue;
            Elem q = r[k];
            for (std::size_t i = 0; i <= dp; ++i)
                r[k - dp + i] = base_->sub(r[k - dp + i], base_->mul(q, phi.coeffs[i]));
            out.quotient.coeffs[k - dp] = std::move(q);
        }
        normalize(out.quotient);
        normalize(out.remainder);
        return out;
    }

    /// lc(b)^{deg a - deg b + 1}·a mod b.
    P prem(const P& a, const P& b) const
    {
        if (b.is_zero())
            internal_error("pseudo-remainder by zero");
        P r = a;
        if (r.coeffs.size() < b.coeffs.size())
            return r;
        const std::size_t db = b.coeffs.size() - 1;
        const Elem& lb = lc(b);
        std::size_t steps = r.coeffs.size() - db;
        while (!r.is_zero() && r.coeffs.size() > db) {
            const std::size_t k = r.coeffs.size() - 1;
            Elem lr = r.coeffs[k];
            for (auto& c : r.coeffs)
                c = base_->mul(c, lb);
            for (std::size_t i = 0; i <= db; ++i)
                r.coeffs[k - db + i] = base_->sub(r.coeffs[k - db + i], base_->mul(lr, b.coeffs[i]));
            normalize(r);
            --steps;
        }
        for (; steps > 0; --steps)
            r = scale(r, lb);
        return r;
    }

    P derivative(const P& a) const
    {
        P d;
        for (std::size_t i = 1; i < a.coeffs.size(); ++i)
            d.coeffs.push_back(base_->mul(a.coeffs[i], base_->from_integer(static_cast<long long>(i))));
        normalize(d);
        return d;
    }

    Elem evaluate(const P& a, const Elem& v) const
    {
        Elem acc = base_->zero();
        for (std::size_t i = a.coeffs.size(); i-- > 0;)
            acc = base_->add(base_->mul(acc, v), a.coeffs[i]);
        return acc;
    }

    /// a(x^m).
    P compose_power(const P& a, std::size_t m) const
    {
        if (a.is_zero())
            return a;
        P r;
        r.coeffs.assign((a.coeffs.size() - 1) * m + 1, base_->zero());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            r.coeffs[i * m] = a.coeffs[i];
        return r;
    }

    /// Canonical coefficient representatives modulo m.
    P mod_coeffs(const P& a, const Elem& m) const
    {
        P r = a;
        for (auto& e : r.coeffs)
            e = base_->mod(e, m);
        normalize(r);
        return r;
    }

    ResiduePoly reduce(const P& a) const
    {
        FieldPolyRing R(base_->residue_field());
        std::vector<FiniteField::Elem> c;
        c.reserve(a.coeffs.size());
        for (const auto& e : a.coeffs)
            c.push_back(base_->reduce(e));
        return R.from_coeffs(std::move(c));
    }

    P lift(const ResiduePoly& a) const
    {
        P r;
        r.coeffs.reserve(a.coeffs.size());
        for (const auto& e : a.coeffs)
            r.coeffs.push_back(base_->lift(e));
        normalize(r);
        return r;
    }

private:
    const B* base_;
};

} // namespace dedekind

#endif
