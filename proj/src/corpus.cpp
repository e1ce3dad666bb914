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

#include "dedekind/corpus.hpp"

#include <utility>
#include <variant>

#include "dedekind/criterion.hpp"
#include "dedekind/hensel.hpp"
#include "dedekind/poly_io.hpp"

namespace dedekind {

CorpusFailure::CorpusFailure(std::uint64_t seed, std::size_t index, std::string suite, std::string base,
                             std::string poly)
    : Error(ErrorCode::internal, "suite " + suite + " failed at instance " + std::to_string(index) + " (" + base +
                                     ", f = " + poly + ")"),
      seed_(seed), index_(index), suite_(std::move(suite)), base_(std::move(base)), poly_(std::move(poly))
{
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) noexcept
{
    // splitmix64 of the pair
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

mpz_class small_elem(const IntegerBase& base, std::mt19937_64& rng)
{
    const long p = base.prime() < 1000 ? base.prime().get_si() : 1000;
    const long bound = p * p + 2;
    return mpz_class(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
}

FieldPoly small_elem(const FunctionBase& base, std::mt19937_64& rng)
{
    const auto& Fq = base.constant_field();
    std::vector<FiniteField::Elem> c;
    const unsigned len = static_cast<unsigned>(rng() % 4);
    for (unsigned i = 0; i < len; ++i)
        c.push_back(Fq.random(rng));
    return base.t_ring().from_coeffs(std::move(c));
}

template <ValuedRing B>
Poly<typename B::Elem> generate(const B& base, std::mt19937_64& rng, unsigned max_deg)
{
    using E = typename B::Elem;
    PolyRing<B> R(base);
    if (max_deg < 1)
        throw Error(ErrorCode::usage, "degree bound must be at least 1");

    if (rng() % 2 == 0) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % max_deg);
        std::vector<E> c;
        for (unsigned i = 0; i < n; ++i)
            c.push_back(small_elem(base, rng));
        c.push_back(base.one());
        return R.make(std::move(c));
    }

    // ∏ lift(φ̄_j)^{l_j} + π^s·(random lower part)
    const auto& k = base.residue_field();
    auto f = R.one();
    std::size_t deg = 0;
    const unsigned pieces = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned j = 0; j < pieces; ++j) {
        const unsigned d = 1 + static_cast<unsigned>(rng() % 2);
        const unsigned l = 1 + static_cast<unsigned>(rng() % 3);
        if (deg + static_cast<std::size_t>(d) * l > max_deg)
            continue;
        Poly<E> phi;
        for (unsigned i = 0; i < d; ++i)
            phi.coeffs.push_back(base.lift(k.random(rng)));
        phi.coeffs.push_back(base.one());
        R.normalize(phi);
        f = R.mul(f, R.pow(phi, l));
        deg += static_cast<std::size_t>(d) * l;
    }
    if (deg == 0) {
        f = R.x();
        deg = 1;
    }
    std::vector<E> low;
    for (std::size_t i = 0; i < deg; ++i)
        low.push_back(small_elem(base, rng));
    const unsigned s = rng() % 4 == 0 ? 2 : 1;
    return R.add(f, R.scale(R.make(std::move(low)), base.prime_power(s)));
}

template <ValuedRing B>
void check_instance(const B& base, const MonicPoly<typename B::Elem>& f, std::mt19937_64& rng,
                    const CorpusConfig& cfg, std::size_t index, CorpusReport& rep)
{
    PolyRing<B> R(base);
    auto fail = [&](const char* suite) {
        throw CorpusFailure(cfg.seed, index, suite, base.describe(), format_poly(base, f.poly()));
    };
    const VerdictOptions opts{rng(), true, false};
    auto v = dedekind_verdict(base, f, opts);
    ++rep.instances;
    ++(v.integrally_closed ? rep.verdict_true : rep.verdict_false);

    ++rep.oracle_agreement.run;
    if (classical_from_factorization(base, f, v.factorization) != v.integrally_closed) {
        ++rep.oracle_agreement.failures;
        fail("oracle_agreement");
    }

    ++rep.lift_invariance.run;
    for (unsigned j = 0; j < cfg.lifts; ++j) {
        std::vector<MonicPoly<typename B::Elem>> lifts;
        for (const auto& phi : v.factorization.lifts) {
            std::vector<typename B::Elem> c;
            for (std::size_t i = 0; i < phi.degree(); ++i)
                c.push_back(small_elem(base, rng));
            auto pert = R.scale(R.make(std::move(c)), base.prime_power(1 + static_cast<unsigned>(rng() % 2)));
            lifts.push_back(MonicPoly<typename B::Elem>::checked(base, R.add(phi.poly(), pert)));
        }
        auto w = evaluate_criterion(base, f, with_lifts(base, v.factorization, std::move(lifts)));
        ++rep.lifts_checked;
        if (w.integrally_closed != v.integrally_closed) {
            ++rep.lift_invariance.failures;
            fail("lift_invariance");
        }
    }

    if (!v.integrally_closed)
        return;
    ++rep.defectless.run;
    if (!defectless_check(split_from_verdict(base, f, v), f)) {
        ++rep.defectless.failures;
        fail("defectless");
    }

    if (v.index_set.empty())
        return;
    ++rep.verify_main2.run;
    for (unsigned k = auto_precision(base, f);; k = std::min(2 * k, precision_cap)) {
        try {
            if (!verify_main2_at(base, f, v, k).all_pass) {
                ++rep.verify_main2.failures;
                fail("verify_main2");
            }
            break;
        } catch (const PrecisionExhausted&) {
            if (k >= precision_cap) {
                ++rep.verify_main2.failures;
                fail("verify_main2");
            }
        }
    }
}

} // namespace

Poly<mpz_class> random_instance(const IntegerBase& base, std::mt19937_64& rng, unsigned max_deg)
{
    return generate(base, rng, max_deg);
}

Poly<FieldPoly> random_instance(const FunctionBase& base, std::mt19937_64& rng, unsigned max_deg)
{
    return generate(base, rng, max_deg);
}

CorpusReport run_corpus(const CorpusConfig& cfg)
{
    if (cfg.count < 1)
        throw Error(ErrorCode::usage, "count must be at least 1");
    std::vector<ValuedBase> bases;
    for (auto p : cfg.primes)
        bases.emplace_back(IntegerBase(mpz_class(static_cast<unsigned long>(p))));
    for (auto p : cfg.fq_chars) {
        auto Fp = FiniteField::prime_field(p);
        bases.emplace_back(FunctionBase(Fp, FieldPolyRing(*Fp).x()));
    }
    if (bases.empty())
        throw Error(ErrorCode::usage, "no bases selected");

    CorpusReport rep;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        if (cfg.only && *cfg.only != i)
            continue;
        std::mt19937_64 rng(instance_seed(cfg.seed, i));
        std::visit(
            [&](const auto& base) {
                auto f = MonicPoly<typename std::decay_t<decltype(base)>::Elem>::checked(
                    base, random_instance(base, rng, cfg.max_deg));
                check_instance(base, f, rng, cfg, i, rep);
            },
            bases[i % bases.size()]);
    }
    return rep;
}

} // namespace dedekind
