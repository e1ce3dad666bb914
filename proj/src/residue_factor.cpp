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

#include "dedekind/residue_factor.hpp"

#include <algorithm>

#include "dedekind/error.hpp"

namespace dedekind {

namespace {

std::size_t deg(const ResiduePoly& a)
{
    return a.coeffs.empty() ? 0 : a.coeffs.size() - 1;
}

void require_monic(const FieldPolyRing& R, const ResiduePoly& f, const char* who)
{
    if (!R.is_monic(f) || f.coeffs.size() < 2)
        throw Error(ErrorCode::precondition, std::string(who) + ": input must be monic of degree >= 1");
}

void squarefree_rec(const FieldPolyRing& R, const ResiduePoly& f, unsigned scale,
                    std::vector<std::pair<ResiduePoly, unsigned>>& out)
{
    ResiduePoly c = R.gcd(f, R.derivative(f));
    ResiduePoly w = R.divexact(f, c);
    for (unsigned i = 1; deg(w) > 0; ++i) {
        ResiduePoly y = R.gcd(w, c);
        ResiduePoly z = R.divexact(w, y);
        if (!R.is_one(z))
            out.emplace_back(std::move(z), i * scale);
        w = std::move(y);
        c = R.divexact(c, w);
    }
    if (!R.is_one(c)) {
        const auto p = static_cast<unsigned>(R.field().characteristic());
        squarefree_rec(R, R.pth_root(c), scale * p, out);
    }
}

ResiduePoly random_poly(const FiniteField& F, std::size_t below, std::mt19937_64& rng)
{
    FieldPolyRing R(F);
    std::vector<FiniteField::Elem> c(below);
    for (auto& e : c)
        e = F.random(rng);
    return R.from_coeffs(std::move(c));
}

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

ResiduePoly frobenius_power(const FieldPolyRing& R, unsigned k, const ResiduePoly& f)
{
    // x^{q^k} mod f
    const mpz_class q = R.field().order();
    ResiduePoly h = R.rem(R.x(), f);
    for (unsigned i = 0; i < k; ++i)
        h = R.powmod(h, q, f);
    return h;
}

} // namespace

std::vector<std::pair<ResiduePoly, unsigned>> squarefree_decomposition(const FiniteField& F,
                                                                       const ResiduePoly& fbar)
{
    FieldPolyRing R(F);
    require_monic(R, fbar, "squarefree_decomposition");
    std::vector<std::pair<ResiduePoly, unsigned>> out;
    squarefree_rec(R, fbar, 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<std::pair<ResiduePoly, unsigned>> distinct_degree_factorization(const FiniteField& F,
                                                                            const ResiduePoly& f)
{
    FieldPolyRing R(F);
    require_monic(R, f, "distinct_degree_factorization");
    const mpz_class q = F.order();
    std::vector<std::pair<ResiduePoly, unsigned>> out;
    ResiduePoly rest = f;
    ResiduePoly h = R.rem(R.x(), rest);
    for (unsigned i = 1; deg(rest) >= 2 * i; ++i) {
        h = R.powmod(h, q, rest);
        ResiduePoly g = R.gcd(R.sub(h, R.x()), rest);
        if (!R.is_one(g)) {
            out.emplace_back(g, i);
            rest = R.divexact(rest, g);
            h = R.rem(h, rest);
        }
    }
    if (deg(rest) > 0)
        out.emplace_back(rest, static_cast<unsigned>(deg(rest)));
    return out;
}

std::vector<ResiduePoly> equal_degree_factorization(const FiniteField& F, const ResiduePoly& f,
                                                    unsigned d, std::mt19937_64& rng)
{
    FieldPolyRing R(F);
    require_monic(R, f, "equal_degree_factorization");
    if (d == 0 || deg(f) % d != 0)
        throw Error(ErrorCode::precondition, "equal_degree_factorization: degree mismatch");
    if (deg(f) == d)
        return {f};

    const mpz_class q = F.order();
    const bool even = F.characteristic() == 2;
    mpz_class exponent;
    if (!even) {
        mpz_pow_ui(exponent.get_mpz_t(), q.get_mpz_t(), d);
        exponent = (exponent - 1) / 2;
    }
    const std::size_t trace_terms = F.dimension() * d; // q^d = 2^{trace_terms}

    for (;;) {
        ResiduePoly a = random_poly(F, deg(f), rng);
        if (a.coeffs.size() < 2)
            continue;
        ResiduePoly b;
        if (even) {
            ResiduePoly term = a;
            b = a;
            for (std::size_t j = 1; j < trace_terms; ++j) {
                term = R.mulmod(term, term, f);
                b = R.add(b, term);
            }
        } else {
            b = R.sub(R.powmod(a, exponent, f), R.one());
        }
        ResiduePoly g = R.gcd(b, f);
        if (deg(g) == 0 || deg(g) == deg(f))
            continue;
        auto left = equal_degree_factorization(F, g, d, rng);
        auto right = equal_degree_factorization(F, R.divexact(f, g), d, rng);
        left.insert(left.end(), std::make_move_iterator(right.begin()),
                    std::make_move_iterator(right.end()));
        return left;
    }
}

std::vector<ResidueFactor> factor_residue(const FiniteField& F, const ResiduePoly& fbar,
                                          std::uint64_t seed)
{
    FieldPolyRing R(F);
    require_monic(R, fbar, "factor_residue");
    std::mt19937_64 rng(seed);
    std::vector<ResidueFactor> out;
    for (auto& [part, mult] : squarefree_decomposition(F, fbar)) {
        for (auto& [block, d] : distinct_degree_factorization(F, part)) {
            for (auto& phi : equal_degree_factorization(F, block, d, rng))
                out.push_back(ResidueFactor{std::move(phi), mult});
        }
    }
    std::sort(out.begin(), out.end(), [&R](const ResidueFactor& a, const ResidueFactor& b) {
        return R.compare(a.phibar, b.phibar) < 0;
    });
    return out;
}

bool irreducible_test(const FiniteField& F, const ResiduePoly& fbar)
{
    FieldPolyRing R(F);
    require_monic(R, fbar, "irreducible_test");
    const auto n = static_cast<unsigned>(deg(fbar));
    if (n == 1)
        return true;
    const ResiduePoly x = R.x();
    for (unsigned r : prime_divisors(n)) {
        ResiduePoly h = frobenius_power(R, n / r, fbar);
        if (!R.is_one(R.gcd(R.sub(h, x), fbar)))
            return false;
    }
    return frobenius_power(R, n, fbar) == R.rem(x, fbar);
}

unsigned phibar_adic_valuation(const FiniteField& F, const ResiduePoly& Pbar,
                               const ResiduePoly& phibar)
{
    if (Pbar.is_zero())
        throw Error(ErrorCode::zero_polynomial, "phibar-adic valuation of the zero polynomial");
    FieldPolyRing R(F);
    if (phibar.coeffs.size() < 2)
        throw Error(ErrorCode::precondition, "phibar must have degree >= 1");
    unsigned u = 0;
    ResiduePoly cur = Pbar;
    for (;;) {
        FieldDivMod qr = R.divmod(cur, phibar);
        if (!qr.remainder.is_zero())
            return u;
        ++u;
        cur = std::move(qr.quotient);
    }
}

ResiduePoly expand_factorization(const FiniteField& F, const std::vector<ResidueFactor>& factors)
{
    FieldPolyRing R(F);
    ResiduePoly acc = R.one();
    for (const auto& fac : factors)
        acc = R.mul(acc, R.pow(fac.phibar, fac.multiplicity));
    return acc;
}

} // namespace dedekind
