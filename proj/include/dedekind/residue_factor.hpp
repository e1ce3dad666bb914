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

#ifndef DEDEKIND_RESIDUE_FACTOR_HPP
#define DEDEKIND_RESIDUE_FACTOR_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dedekind/field_poly.hpp"
#include "dedekind/finite_field.hpp"

namespace dedekind {

/// One factor φ̄^l of a residue factorization.
struct ResidueFactor {
    ResiduePoly phibar; // monic irreducible
    unsigned multiplicity = 0;

    friend bool operator==(const ResidueFactor&, const ResidueFactor&) = default;
};

/* Squarefree decomposition of a monic polynomial: pairs (s_m, m) with
 * fbar = ∏ s_m^m, each s_m squarefree, pairwise coprime, sorted by m.
 * Repeated p-th powers are handled through p-th roots.
 */
std::vector<std::pair<ResiduePoly, unsigned>> squarefree_decomposition(const FiniteField& F,
                                                                       const ResiduePoly& fbar);

/* For squarefree monic f: pairs (g_d, d) where g_d is the product of the
 * irreducible factors of degree d. Pairs with g_d = 1 are omitted.
 */
std::vector<std::pair<ResiduePoly, unsigned>> distinct_degree_factorization(const FiniteField& F,
                                                                            const ResiduePoly& f);

/* Split a squarefree monic f whose irreducible factors all have degree d.
 * Cantor-Zassenhaus for odd q, trace map in characteristic 2.
 */
std::vector<ResiduePoly> equal_degree_factorization(const FiniteField& F, const ResiduePoly& f,
                                                    unsigned d, std::mt19937_64& rng);

/* Complete factorization fbar = ∏ φ̄_i^{l_i}, sorted by (degree,
 * coefficients from the top). The order does not depend on the seed.
 */
std::vector<ResidueFactor> factor_residue(const FiniteField& F, const ResiduePoly& fbar,
                                          std::uint64_t seed);

/// Rabin's test.
bool irreducible_test(const FiniteField& F, const ResiduePoly& fbar);

/// Largest u with phibar^u | Pbar. Throws for Pbar = 0.
unsigned phibar_adic_valuation(const FiniteField& F, const ResiduePoly& Pbar,
                               const ResiduePoly& phibar);

/// ∏ φ̄_i^{l_i}.
ResiduePoly expand_factorization(const FiniteField& F, const std::vector<ResidueFactor>& factors);

} // namespace dedekind

#endif
