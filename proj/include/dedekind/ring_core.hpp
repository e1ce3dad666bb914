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

#ifndef DEDEKIND_RING_CORE_HPP
#define DEDEKIND_RING_CORE_HPP

#include <algorithm>
#include <utility>

#include "dedekind/base.hpp"
#include "dedekind/degree.hpp"
#include "dedekind/error.hpp"
#include "dedekind/poly.hpp"

namespace dedekind {

template <ValuedRing B>
typename B::Elem power(const B& base, const typename B::Elem& a, std::size_t n)
{
    typename B::Elem result = base.one();
    typename B::Elem b = a;
    while (n != 0) {
        if (n & 1U)
            result = base.mul(result, b);
        n >>= 1U;
        if (n != 0)
            b = base.mul(b, b);
    }
    return result;
}

template <ValuedRing B>
DivMod<typename B::Elem> poly_divmod_monic(const B& base, const Poly<typename B::Elem>& f,
                                           const MonicPoly<typename B::Elem>& phi)
{
    if (phi.degree() < 1)
        throw Error(ErrorCode::precondition, "divisor must have degree >= 1");
    return PolyRing<B>(base).divmod_monic(f, phi.poly());
}

template <ValuedRing B>
Valuation element_valuation(const B& base, const typename B::Elem& a)
{
    return base.valuation(a);
}

/// Gauss extension: minimum coefficient valuation.
template <ValuedRing B>
Valuation gauss_valuation(const B& base, const Poly<typename B::Elem>& P)
{
    Valuation v = Valuation::infinity();
    for (const auto& c : P.coeffs)
        v = std::min(v, base.valuation(c));
    return v;
}

template <class E>
struct PrimitiveSplit {
    Poly<E> primitive; // P0 with Gauss valuation 0
    E scalar;          // prime^{gauss_valuation(P)}
};

template <ValuedRing B>
PrimitiveSplit<typename B::Elem> normalize_primitive(const B& base, const Poly<typename B::Elem>& P)
{
    if (P.is_zero())
        throw Error(ErrorCode::zero_polynomial, "cannot normalize the zero polynomial");
    const long v = gauss_valuation(base, P).value();
    auto a = base.prime_power(static_cast<unsigned>(v));
    return {PolyRing<B>(base).divexact_scalar(P, a), std::move(a)};
}

/* Reduction to k_ν[x]. Base-ring elements are integral by construction
 * (Z for ℚ, F_q[t] for F_q(t)), so no integrality failure can occur here.
 */
template <ValuedRing B>
ResiduePoly reduce_mod(const B& base, const Poly<typename B::Elem>& P)
{
    return PolyRing<B>(base).reduce(P);
}

/* Resultant by the subresultant algorithm (exact divisions only, no content
 * extraction). Res(f, g) = lc(f)^{deg g} ∏_{f(a)=0} g(a).
 */
template <ValuedRing B>
typename B::Elem resultant(const B& base, const Poly<typename B::Elem>& f,
                           const Poly<typename B::Elem>& g)
{
    using Elem = typename B::Elem;
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorCode::zero_polynomial, "resultant with a zero polynomial");
    PolyRing<B> R(base);
    auto deg = [](const Poly<Elem>& p) { return p.coeffs.size() - 1; };

    Poly<Elem> A = f;
    Poly<Elem> Bq = g;
    bool negate = false;
    if (deg(A) < deg(Bq)) {
        if (deg(A) % 2 == 1 && deg(Bq) % 2 == 1)
            negate = true;
        std::swap(A, Bq);
    }
    auto signed_result = [&](Elem r) { return negate ? base.neg(r) : r; };
    if (deg(Bq) == 0)
        return signed_result(power(base, R.lc(Bq), deg(A)));

    Elem gg = base.one();
    Elem h = base.one();
    for (;;) {
        const std::size_t delta = deg(A) - deg(Bq);
        if (deg(A) % 2 == 1 && deg(Bq) % 2 == 1)
            negate = !negate;
        Poly<Elem> Rm = R.prem(A, Bq);
        A = std::move(Bq);
        if (Rm.is_zero())
            return base.zero();
        Bq = R.divexact_scalar(Rm, base.mul(gg, power(base, h, delta)));
        gg = R.lc(A);
        if (delta == 1)
            h = gg;
        else if (delta > 1)
            h = base.divexact(power(base, gg, delta), power(base, h, delta - 1));
        if (deg(Bq) == 0)
            break;
    }
    const std::size_t dA = deg(A);
    Elem last = base.divexact(power(base, R.lc(Bq), dA), power(base, h, dA - 1));
    return signed_result(std::move(last));
}

/// (-1)^{n(n-1)/2} Res(f, f') for monic f; zero when f' = 0.
template <ValuedRing B>
typename B::Elem discriminant(const B& base, const MonicPoly<typename B::Elem>& f)
{
    const std::size_t n = f.degree();
    if (n < 1)
        throw Error(ErrorCode::constant_polynomial, "discriminant of a constant");
    PolyRing<B> R(base);
    auto fp = R.derivative(f.poly());
    if (fp.is_zero())
        return base.zero();
    auto r = resultant(base, f.poly(), fp);
    return (n * (n - 1) / 2) % 2 == 1 ? base.neg(r) : r;
}

} // namespace dedekind

#endif
