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

#ifndef DEDEKIND_CORPUS_HPP
#define DEDEKIND_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dedekind/base.hpp"
#include "dedekind/error.hpp"
#include "dedekind/poly.hpp"

namespace dedekind {

/* Seeded random instances checked against the engine's invariants.
 * Instance i draws from its own generator seeded by (seed, i), so any
 * instance can be replayed alone.
 */
struct CorpusConfig {
    std::uint64_t seed = 0;
    std::size_t count = 100;
    unsigned max_deg = 6;
    std::vector<std::uint64_t> primes{2, 3, 5};
    std::vector<std::uint64_t> fq_chars; // F_p(t) at the place t
    unsigned lifts = 5;
    std::optional<std::size_t> only; // replay a single instance
};

struct SuiteStats {
    std::size_t run = 0;
    std::size_t failures = 0;
};

struct CorpusReport {
    std::size_t instances = 0;
    std::size_t verdict_true = 0;
    std::size_t verdict_false = 0;
    SuiteStats oracle_agreement;
    SuiteStats lift_invariance;
    SuiteStats defectless;
    SuiteStats verify_main2;
    std::size_t lifts_checked = 0;
};

/// First disagreement; carries what is needed to replay it.
class CorpusFailure : public Error {
public:
    CorpusFailure(std::uint64_t seed, std::size_t index, std::string suite, std::string base, std::string poly);

    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t index() const noexcept { return index_; }
    const std::string& suite() const noexcept { return suite_; }
    const std::string& base() const noexcept { return base_; }
    const std::string& poly() const noexcept { return poly_; }

private:
    std::uint64_t seed_;
    std::size_t index_;
    std::string suite_;
    std::string base_;
    std::string poly_;
};

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) noexcept;

Poly<mpz_class> random_instance(const IntegerBase& base, std::mt19937_64& rng, unsigned max_deg);
Poly<FieldPoly> random_instance(const FunctionBase& base, std::mt19937_64& rng, unsigned max_deg);

/// Runs every suite; throws CorpusFailure on the first disagreement.
CorpusReport run_corpus(const CorpusConfig& config);

} // namespace dedekind

#endif
