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

#ifndef DEDEKIND_FACTORIZATION_HPP
#define DEDEKIND_FACTORIZATION_HPP

#include <cstdint>
#include <vector>

#include "dedekind/base.hpp"
#include "dedekind/poly.hpp"
#include "dedekind/residue_factor.hpp"
#include "dedekind/ring_core.hpp"

namespace dedekind {

/// f̄ = ∏ φ̄_i^{l_i} together with monic lifts φ_i ∈ R_ν[x].
template <ValuedRing B>
struct ResidueFactorization {
    using Elem = typename B::Elem;

    std::vector<ResidueFactor> factors;
    std::vector<MonicPoly<Elem>> lifts;

    std::size_t size() const noexcept { return factors.size(); }

    /// Indices with l_i >= 2.
    std::vector<std::size_t> index_set() const
    {
        std::vector<std::size_t> I;
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i].multiplicity >= 2)
                I.push_back(i);
        return I;
    }
};

/// Coefficient-wise canonical lift of a monic residue polynomial.
template <ValuedRing B>
MonicPoly<typename B::Elem> monic_lift(const B& base, const ResiduePoly& phibar)
{
    FieldPolyRing R(base.residue_field());
    if (!R.is_monic(phibar))
        throw Error(ErrorCode::not_monic, "residue polynomial to lift is not monic");
    return MonicPoly<typename B::Elem>::checked(base, PolyRing<B>(base).lift(phibar));
}

template <ValuedRing B>
ResidueFactorization<B> factor_and_lift(const B& base, const MonicPoly<typename B::Elem>& f,
                                        std::uint64_t seed)
{
    ResidueFactorization<B> out;
    out.factors = factor_residue(base.residue_field(), reduce_mod(base, f.poly()), seed);
    out.lifts.reserve(out.factors.size());
    for (const auto& fac : out.factors)
        out.lifts.push_back(monic_lift(base, fac.phibar));
    return out;
}

} // namespace dedekind

#endif
