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

#ifndef DEDEKIND_CRITERION_HPP
#define DEDEKIND_CRITERION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dedekind/base.hpp"
#include "dedekind/error.hpp"
#include "dedekind/factorization.hpp"
#include "dedekind/irreducibility.hpp"
#include "dedekind/poly.hpp"
#include "dedekind/ring_core.hpp"

namespace dedekind {

struct VerdictOptions {
    std::uint64_t seed = 0;
    bool assume_irreducible = false;
    bool run_classical = false;
};

/// f = q·φ_i + r with the valuation of r; one per index in I.
template <class E>
struct Witness {
    std::size_t index = 0; // position in the residue factorization
    MonicPoly<E> phi;
    unsigned multiplicity = 0;
    Poly<E> quotient;
    Poly<E> remainder;
    Valuation valuation;
};

template <ValuedRing B>
struct CriterionVerdict {
    using Elem = typename B::Elem;

    bool integrally_closed = false;
    std::vector<Witness<Elem>> witnesses;
    std::vector<std::size_t> index_set;
    long sigma = 1;
    std::optional<bool> classical_agrees;
    ResidueFactorization<B> factorization;
};

/// Rejects constants and, unless assumed away, detected reducibility.
template <ValuedRing B>
void check_input(const B& base, const MonicPoly<typename B::Elem>& f, bool assume_irreducible)
{
    if (f.degree() < 1)
        throw Error(ErrorCode::constant_polynomial, "polynomial must have degree >= 1");
    if (assume_irreducible)
        return;
    auto check = check_irreducibility(base, f);
    if (check.refuted)
        throw Error(ErrorCode::reducible_input, "polynomial is reducible: " + check.reason);
}

/* Replaces the canonical lifts. Each new lift must be monic of the same
 * degree and reduce to the same residue factor.
 */
template <ValuedRing B>
ResidueFactorization<B> with_lifts(const B& base, ResidueFactorization<B> rf,
                                   std::vector<MonicPoly<typename B::Elem>> lifts)
{
    if (lifts.size() != rf.size())
        throw Error(ErrorCode::precondition, "one lift per residue factor required");
    for (std::size_t i = 0; i < lifts.size(); ++i)
        if (reduce_mod(base, lifts[i].poly()) != rf.factors[i].phibar)
            throw Error(ErrorCode::precondition, "lift does not reduce to its residue factor");
    rf.lifts = std::move(lifts);
    return rf;
}

/// The remainder criterion on a given factorization and choice of lifts.
template <ValuedRing B>
CriterionVerdict<B> evaluate_criterion(const B& base, const MonicPoly<typename B::Elem>& f,
                                       ResidueFactorization<B> rf)
{
    CriterionVerdict<B> v;
    v.sigma = base.sigma();
    v.index_set = rf.index_set();
    v.integrally_closed = true;
    for (std::size_t i : v.index_set) {
        auto qr = poly_divmod_monic(base, f.poly(), rf.lifts[i]);
        const Valuation nu = gauss_valuation(base, qr.remainder);
        if (!(nu == v.sigma))
            v.integrally_closed = false;
        v.witnesses.push_back({i, rf.lifts[i], rf.factors[i].multiplicity, std::move(qr.quotient),
                               std::move(qr.remainder), nu});
    }
    v.factorization = std::move(rf);
    return v;
}

/* gcd form: with g = ∏ φ_i, h = lift(∏ φ̄_i^{l_i - 1}) and T = (g·h - f)/π,
 * the order is maximal iff gcd(T̄, ḡ, h̄) = 1.
 */
template <ValuedRing B>
bool classical_from_factorization(const B& base, const MonicPoly<typename B::Elem>& f,
                                  const ResidueFactorization<B>& rf)
{
    PolyRing<B> R(base);
    FieldPolyRing Rk(base.residue_field());
    auto g = R.one();
    ResiduePoly hbar = Rk.one();
    for (std::size_t i = 0; i < rf.size(); ++i) {
        g = R.mul(g, rf.lifts[i].poly());
        hbar = Rk.mul(hbar, Rk.pow(rf.factors[i].phibar, rf.factors[i].multiplicity - 1));
    }
    auto h = R.lift(hbar);
    auto diff = R.sub(R.mul(g, h), f.poly());
    if (!diff.is_zero() && gauss_valuation(base, diff) < Valuation(1))
        internal_error("g*h - f is not divisible by the prime");
    auto Tbar = reduce_mod(base, R.divexact_scalar(diff, base.prime()));
    auto d = Rk.gcd(Rk.gcd(Tbar, reduce_mod(base, g)), hbar);
    return Rk.is_one(d);
}

template <ValuedRing B>
CriterionVerdict<B> dedekind_verdict(const B& base, const MonicPoly<typename B::Elem>& f,
                                     const VerdictOptions& opts = {})
{
    check_input(base, f, opts.assume_irreducible);
    auto rf = factor_and_lift(base, f, opts.seed);
    auto v = evaluate_criterion(base, f, std::move(rf));
    if (opts.run_classical)
        v.classical_agrees = classical_from_factorization(base, f, v.factorization) == v.integrally_closed;
    return v;
}

template <ValuedRing B>
bool classical_verdict(const B& base, const MonicPoly<typename B::Elem>& f, const VerdictOptions& opts = {})
{
    check_input(base, f, opts.assume_irreducible);
    return classical_from_factorization(base, f, factor_and_lift(base, f, opts.seed));
}

/// Q = (π, φ(α)) with ramification e and residue degree f.
template <class E>
struct PrimeIdeal {
    E prime;
    MonicPoly<E> phi;
    unsigned e = 0;
    std::size_t f = 0;
};

template <class E>
struct SplittingReport {
    std::vector<PrimeIdeal<E>> ideals;
    bool defectless = false;
};

template <class E>
bool defectless_check(const SplittingReport<E>& report, const MonicPoly<E>& f)
{
    std::size_t sum = 0;
    for (const auto& q : report.ideals)
        sum += static_cast<std::size_t>(q.e) * q.f;
    return sum == f.degree();
}

template <ValuedRing B>
SplittingReport<typename B::Elem> split_from_verdict(const B& base, const MonicPoly<typename B::Elem>& f,
                                                     const CriterionVerdict<B>& v)
{
    if (!v.integrally_closed)
        throw Error(ErrorCode::criterion_false, "splitting refused: the order is not integrally closed");
    SplittingReport<typename B::Elem> report;
    const auto& rf = v.factorization;
    for (std::size_t i = 0; i < rf.size(); ++i)
        report.ideals.push_back({base.prime(), rf.lifts[i], rf.factors[i].multiplicity, rf.lifts[i].degree()});
    report.defectless = defectless_check(report, f);
    if (!report.defectless)
        internal_error("splitting is not defectless");
    return report;
}

template <ValuedRing B>
SplittingReport<typename B::Elem> split_prime(const B& base, const MonicPoly<typename B::Elem>& f,
                                              const VerdictOptions& opts = {})
{
    return split_from_verdict(base, f, dedekind_verdict(base, f, opts));
}

} // namespace dedekind

#endif
