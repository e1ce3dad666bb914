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

#ifndef DEDEKIND_IRREDUCIBILITY_HPP
#define DEDEKIND_IRREDUCIBILITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dedekind/base.hpp"
#include "dedekind/descent.hpp"
#include "dedekind/poly.hpp"
#include "dedekind/ring_core.hpp"

namespace dedekind {

/* Best-effort reducibility detection over the fraction field. A refutation
 * is always a proof; absence of a refutation proves nothing.
 */
struct IrreducibilityCheck {
    bool refuted = false;
    std::string reason;
};

/// Candidate roots cap; larger searches are skipped.
inline constexpr std::size_t root_candidate_limit = 100000;

/* Positive divisors of n != 0, or nullopt when |n| cannot be factored by
 * trial division up to 10^6 with a prime or unit cofactor.
 */
std::optional<std::vector<mpz_class>> integer_divisors(const mpz_class& n, std::size_t limit);

/// All divisors of a != 0 in F_q[t] (units included), or nullopt past limit.
std::optional<std::vector<FieldPoly>> tpoly_divisors(const FiniteField& Fq, const FieldPoly& a,
                                                     std::size_t limit);

namespace detail {

inline std::optional<std::vector<mpz_class>> root_candidates(const IntegerBase&, const mpz_class& a0)
{
    auto divisors = integer_divisors(a0, root_candidate_limit / 2);
    if (!divisors)
        return std::nullopt;
    std::vector<mpz_class> out;
    for (const auto& d : *divisors) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

inline std::optional<std::vector<FieldPoly>> root_candidates(const FunctionBase& base, const FieldPoly& a0)
{
    return tpoly_divisors(base.constant_field(), a0, root_candidate_limit);
}

/// Coefficients all lie in F_q[t^p] (hence are p-th powers).
inline bool coefficients_are_pth_powers(const IntegerBase&, const Poly<mpz_class>&) { return false; }

inline bool coefficients_are_pth_powers(const FunctionBase& base, const Poly<FieldPoly>& f)
{
    const std::uint64_t p = base.characteristic();
    for (const auto& c : f.coeffs)
        for (std::size_t j = 0; j < c.coeffs.size(); ++j)
            if (j % p != 0 && !base.constant_field().is_zero(c.coeffs[j]))
                return false;
    return true;
}

template <ValuedRing B>
IrreducibilityCheck separable_checks(const B& base, const MonicPoly<typename B::Elem>& f)
{
    const auto& P = f.poly();
    PolyRing<B> R(base);
    if (f.degree() <= 1)
        return {};
    if (base.is_zero(P.coeffs[0]))
        return {true, "x divides the polynomial"};
    if (!R.derivative(P).is_zero() && base.is_zero(discriminant(base, f)))
        return {true, "repeated factor: gcd(f, f') is not constant"};
    if (auto cands = root_candidates(base, P.coeffs[0])) {
        for (const auto& c : *cands)
            if (base.is_zero(R.evaluate(P, c)))
                return {true, "root " + base.to_string(c) + " in the base field"};
    }
    return {};
}

} // namespace detail

template <ValuedRing B>
IrreducibilityCheck check_irreducibility(const B& base, const MonicPoly<typename B::Elem>& f)
{
    if (f.degree() <= 1)
        return {};
    auto descent = frobenius_descent(base, f);
    if (descent.d > 0) {
        if (detail::coefficients_are_pth_powers(base, f.poly()))
            return {true, "the polynomial is a p-th power"};
        auto inner = detail::separable_checks(base, descent.g);
        if (inner.refuted)
            inner.reason = "after descent f(x) = g(x^" + std::to_string(descent.exponent) +
                           "): " + inner.reason;
        return inner;
    }
    return detail::separable_checks(base, f);
}

} // namespace dedekind

#endif
