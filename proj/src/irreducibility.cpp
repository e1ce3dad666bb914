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

#include "dedekind/irreducibility.hpp"

#include <utility>

#include "dedekind/residue_factor.hpp"

namespace dedekind {

std::optional<std::vector<mpz_class>> integer_divisors(const mpz_class& n, std::size_t limit)
{
    if (n == 0)
        return std::nullopt;
    mpz_class rest = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> primes;
    for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= rest; ++d) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
                ++e;
            }
            primes.emplace_back(mpz_class(d), e);
        }
    }
    if (rest > 1) {
        if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0)
            return std::nullopt;
        primes.emplace_back(rest, 1);
    }
    std::vector<mpz_class> divisors{mpz_class(1)};
    for (const auto& [p, e] : primes) {
        const std::size_t base_count = divisors.size();
        if (base_count * (e + 1) > limit)
            return std::nullopt;
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base_count; ++i)
                divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

std::optional<std::vector<FieldPoly>> tpoly_divisors(const FiniteField& Fq, const FieldPoly& a,
                                                     std::size_t limit)
{
    if (a.is_zero())
        return std::nullopt;
    FieldPolyRing R(Fq);
    if (Fq.order() > mpz_class(static_cast<unsigned long>(limit)))
        return std::nullopt;
    const auto q = mpz_get_ui(Fq.order().get_mpz_t());

    std::vector<FieldPoly> monic{R.one()};
    if (a.coeffs.size() > 1) {
        for (const auto& fac : factor_residue(Fq, R.make_monic(a), 0)) {
            const std::size_t base_count = monic.size();
            if (base_count * (fac.multiplicity + 1) * (q - 1) > limit)
                return std::nullopt;
            FieldPoly pk = R.one();
            for (unsigned k = 1; k <= fac.multiplicity; ++k) {
                pk = R.mul(pk, fac.phibar);
                for (std::size_t i = 0; i < base_count; ++i)
                    monic.push_back(R.mul(monic[i], pk));
            }
        }
    }
    std::vector<FieldPoly> out;
    out.reserve(monic.size() * (q - 1));
    for (std::uint64_t u = 1; u < q; ++u) {
        auto unit = Fq.from_index(u);
        for (const auto& m : monic)
            out.push_back(R.scale(m, unit));
    }
    return out;
}

} // namespace dedekind
