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


#include <algorithm>
#include <random>

#include "doctest.h"

#include "dedekind/factorization.hpp"
#include "dedekind/residue_factor.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dedekind;
using namespace dedekind::test;

namespace {

std::string show(const FiniteField& F, const std::vector<ResidueFactor>& fs)
{
    FieldPolyRing R(F);
    std::string s;
    for (const auto& f : fs)
        s += "(" + R.to_string(f.phibar, "x") + ")^" + std::to_string(f.multiplicity) + " ";
    return s;
}

std::vector<ResidueFactor> sorted(const FiniteField& F, std::vector<ResidueFactor> fs)
{
    FieldPolyRing R(F);
    std::sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) { return R.compare(a.phibar, b.phibar) < 0; });
    return fs;
}

} // namespace

TEST_CASE("squarefree decomposition")
{
    auto F2 = FiniteField::prime_field(2);
    auto F3 = FiniteField::prime_field(3);
    FieldPolyRing R2(*F2);
    auto a = squarefree_decomposition(*F2, Rp(*F2, "t^2 + 1"));
    REQUIRE(a.size() == 1);
    CHECK(R2.to_string(a[0].first, "x") == "x + 1");
    CHECK(a[0].second == 2);
    auto b = squarefree_decomposition(*F2, R2.pow(Rp(*F2, "t + 1"), 2));
    REQUIRE(b.size() == 1);
    CHECK(b[0].second == 2);
    auto c = squarefree_decomposition(*F3, Rp(*F3, "t^2 + t"));
    REQUIRE(c.size() == 1);
    CHECK(FieldPolyRing(*F3).to_string(c[0].first, "x") == "x^2 + x");
    CHECK(c[0].second == 1);
}

TEST_CASE("factor_residue examples")
{
    auto F11 = FiniteField::prime_field(11);
    FieldPolyRing R11(*F11);
    auto a = factor_residue(*F11, Rp(*F11, "t^2 - 5"), 0);
    // brute-force roots of x^2 - 5 mod 11
    std::vector<std::uint64_t> roots;
    for (std::uint64_t r = 0; r < 11; ++r)
        if ((r * r) % 11 == 5)
            roots.push_back(r);
    REQUIRE(roots == std::vector<std::uint64_t>{4, 7});
    REQUIRE(a.size() == 2);
    // as a set: {x + 7, x + 4}; sorted ascending
    CHECK(R11.to_string(a[0].phibar, "x") == "x + 4");
    CHECK(R11.to_string(a[1].phibar, "x") == "x + 7");

    auto F2 = FiniteField::prime_field(2);
    auto b = factor_residue(*F2, Rp(*F2, "t^2 + 1"), 0);
    CHECK(show(*F2, b) == "(x + 1)^2 ");

    auto F5 = FiniteField::prime_field(5);
    auto c = factor_residue(*F5, Rp(*F5, "t^4 + t^3 + t^2 + t + 1"), 0);
    CHECK(show(*F5, c) == "(x + 4)^4 ");
    CHECK(FieldPolyRing(*F5).pow(Rp(*F5, "t - 1"), 4) == Rp(*F5, "t^4 + t^3 + t^2 + t + 1"));
}

TEST_CASE("monic lifts")
{
    auto Z2 = Q(2);
    CHECK(S(Z2, monic_lift(Z2, Rp(Z2.residue_field(), "t + 1")).poly()) == "x + 1");
    auto Z5 = Q(5);
    CHECK(S(Z5, monic_lift(Z5, Rp(Z5.residue_field(), "t + 4")).poly()) == "x + 4");
    auto F2 = Ft(2);
    CHECK(S(F2, monic_lift(F2, Rp(F2.residue_field(), "t")).poly()) == "x");
    CHECK_THROWS_AS(monic_lift(Z5, Rp(Z5.residue_field(), "2*t + 1")), Error);
}

TEST_CASE("irreducibility and phibar-adic valuation")
{
    auto F2 = FiniteField::prime_field(2);
    auto F5 = FiniteField::prime_field(5);
    CHECK(irreducible_test(*F2, Rp(*F2, "t^2 + t + 1")));
    CHECK_FALSE(irreducible_test(*F2, Rp(*F2, "t^2 + 1")));
    CHECK(irreducible_test(*F5, Rp(*F5, "t^2 - t + 1")));
    bool root = false;
    for (int r = 0; r < 5; ++r)
        root = root || (r * r - r + 1) % 5 == 0;
    CHECK_FALSE(root);

    FieldPolyRing R2(*F2);
    CHECK(phibar_adic_valuation(*F2, R2.mul(R2.pow(Rp(*F2, "t + 1"), 2), Rp(*F2, "t")), Rp(*F2, "t + 1")) == 2);
    CHECK(phibar_adic_valuation(*F2, Rp(*F2, "t + 1"), Rp(*F2, "t")) == 0);
    CHECK(phibar_adic_valuation(*F2, R2.pow(Rp(*F2, "t^2 + t + 1"), 3), Rp(*F2, "t^2 + t + 1")) == 3);
    CHECK_THROWS_AS(phibar_adic_valuation(*F2, ResiduePoly{}, Rp(*F2, "t")), Error);
}

TEST_CASE("residue factorization agrees with trial division for small fields")
{
    std::mt19937_64 rng(2026);
    std::vector<FieldPtr> fields{FiniteField::prime_field(2), FiniteField::prime_field(3),
                                 FiniteField::galois_field(2, 2), FiniteField::prime_field(5),
                                 FiniteField::prime_field(7), FiniteField::galois_field(2, 3),
                                 FiniteField::galois_field(3, 2)};
    for (const auto& F : fields) {
        FieldPolyRing R(*F);
        for (int iter = 0; iter < 60; ++iter) {
            const unsigned deg = 1 + static_cast<unsigned>(rng() % 6);
            ResiduePoly f;
            for (unsigned i = 0; i < deg; ++i)
                f.coeffs.push_back(F->random(rng));
            f.coeffs.push_back(F->one());
            if (iter % 4 == 0 && deg <= 3)
                f = R.mul(f, f); // repeated factors
            if (f.coeffs.size() > 7)
                continue;
            const auto fs = factor_residue(*F, f, rng());
            CHECK(expand_factorization(*F, fs) == f);
            CHECK(show(*F, fs) == show(*F, sorted(*F, oracle::trial_division_factor(*F, f))));
            CHECK(fs == sorted(*F, fs));
            std::size_t total = 0;
            for (const auto& x : fs) {
                CHECK(irreducible_test(*F, x.phibar));
                CHECK(oracle::brute_irreducible(*F, x.phibar));
                total += x.multiplicity * (x.phibar.coeffs.size() - 1);
            }
            CHECK(total == f.coeffs.size() - 1);
            // seed independence
            CHECK(factor_residue(*F, f, rng()) == fs);
        }
    }
}

TEST_CASE("irreducible_test agrees with brute force")
{
    std::mt19937_64 rng(99);
    for (auto F : {FiniteField::prime_field(2), FiniteField::prime_field(3), FiniteField::galois_field(2, 2)}) {
        for (unsigned d = 1; d <= 5; ++d)
            for (const auto& f : oracle::monic_polys(*F, d))
                if (rng() % 4 == 0)
                    CHECK(irreducible_test(*F, f) == oracle::brute_irreducible(*F, f));
    }
}

TEST_CASE("factorization over a residue field of degree > 1")
{
    auto F3 = Ft(3, 1, "t^2 + 1"); // residue field F_9
    auto f = M(F3, "x^2 + 1");
    auto rf = factor_and_lift(F3, f, 0);
    // x^2 + 1 splits over F_9 = F_3[t]/(t^2 + 1) as (x - t)(x + t)
    REQUIRE(rf.size() == 2);
    for (std::size_t i = 0; i < rf.size(); ++i)
        CHECK(reduce_mod(F3, rf.lifts[i].poly()) == rf.factors[i].phibar);
}
