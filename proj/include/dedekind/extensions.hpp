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

#ifndef DEDEKIND_EXTENSIONS_HPP
#define DEDEKIND_EXTENSIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dedekind/base.hpp"
#include "dedekind/criterion.hpp"
#include "dedekind/descent.hpp"
#include "dedekind/hensel.hpp"

namespace dedekind {

enum class CountStatus { known, unknown };

/// Number of extensions of ν to K[x]/(f), when it can be certified.
struct ExtensionCount {
    CountStatus status = CountStatus::unknown;
    std::size_t t = 0; // meaningful only when known
    std::vector<std::string> certificate;

    bool known() const noexcept { return status == CountStatus::known; }
};

namespace detail {

/* F ≡ φ^l with φ = x - c linear: F(x + c) is Eisenstein iff ν(F(c)) = 1.
 * Needs k >= 2 so that the valuation is certified.
 */
template <ValuedRing B>
bool shifted_eisenstein(const B& base, const MonicPoly<typename B::Elem>& F,
                        const MonicPoly<typename B::Elem>& phi, unsigned k, bool exact)
{
    if (phi.degree() != 1 || (!exact && k < 2))
        return false;
    PolyRing<B> R(base);
    auto c = base.neg(phi.poly().coeffs[0]);
    return base.valuation(R.evaluate(F.poly(), c)) == 1;
}

template <ValuedRing B>
ExtensionCount count_separable(const B& base, const MonicPoly<typename B::Elem>& f, const VerdictOptions& opts,
                               std::vector<std::string> chain)
{
    auto verdict = dedekind_verdict(base, f, opts);
    const auto& rf = verdict.factorization;
    if (verdict.integrally_closed) {
        chain.push_back("criterion holds; one extension per residue factor: " + std::to_string(rf.size()));
        return {CountStatus::known, rf.size(), std::move(chain)};
    }
    chain.push_back("criterion fails; " + std::to_string(rf.size()) + " Hensel factor(s)");

    const unsigned k = auto_precision(base, f);
    auto lift = hensel_lift(base, f, rf, k);
    bool all = true;
    for (std::size_t i = 0; i < lift.factors.size(); ++i) {
        const auto& F = lift.factors[i];
        const auto l = rf.factors[i].multiplicity;
        const std::string tag = "factor " + std::to_string(i + 1) + ": ";
        if (F.degree() == 1) {
            chain.push_back(tag + "degree 1");
        } else if (l == 1) {
            chain.push_back(tag + "irreducible residue");
        } else if (shifted_eisenstein(base, F, rf.lifts[i], k, lift.single)) {
            chain.push_back(tag + "Eisenstein after a shift");
        } else if (!lift.single && k >= 2 &&
                   dedekind_verdict(base, F, {opts.seed, true, false}).integrally_closed) {
            chain.push_back(tag + "criterion holds at precision " + std::to_string(k));
        } else {
            chain.push_back(tag + "no certificate");
            all = false;
        }
    }
    if (!all)
        return {CountStatus::unknown, 0, std::move(chain)};
    return {CountStatus::known, lift.factors.size(), std::move(chain)};
}

} // namespace detail

template <ValuedRing B>
ExtensionCount count_extensions(const B& base, const MonicPoly<typename B::Elem>& f, const VerdictOptions& opts = {})
{
    check_input(base, f, opts.assume_irreducible);
    VerdictOptions inner = opts;
    inner.assume_irreducible = true;

    auto verdict = dedekind_verdict(base, f, inner);
    if (verdict.integrally_closed) {
        const auto r = verdict.factorization.size();
        return {CountStatus::known, r, {"criterion holds; one extension per residue factor: " + std::to_string(r)}};
    }
    auto descent = frobenius_descent(base, f);
    if (descent.d == 0)
        return detail::count_separable(base, f, inner, {});
    std::vector<std::string> chain{"f(x) = g(x^" + std::to_string(descent.exponent) +
                                   "); purely inseparable step has a unique extension"};
    return detail::count_separable(base, descent.g, inner, std::move(chain));
}

} // namespace dedekind

#endif
