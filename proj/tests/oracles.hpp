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

// Slow reference implementations, independent of the library algorithms.

#ifndef DEDEKIND_TESTS_ORACLES_HPP
#define DEDEKIND_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "dedekind/base.hpp"
#include "dedekind/finite_field.hpp"
#include "dedekind/poly.hpp"
#include "dedekind/residue_factor.hpp"

namespace dedekind::oracle {

/// Determinant of the Sylvester matrix by fraction-free Bareiss elimination.
template <ValuedRing B>
typename B::Elem sylvester_resultant(const B& base, const Poly<typename B::Elem>& f,
                                     const Poly<typename B::Elem>& g)
{
    using E = typename B::Elem;
    const std::size_t m = f.coeffs.size() - 1;
    const std::size_t n = g.coeffs.size() - 1;
    const std::size_t N = m + n;
    if (N == 0)
        return base.one();
    std::vector<std::vector<E>> A(N, std::vector<E>(N, base.zero()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j)
            A[r][r + j] = f.coeffs[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j)
            A[n + r][r + j] = g.coeffs[n - j];

    bool negate = false;
    E prev = base.one();
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (base.is_zero(A[k][k])) {
            std::size_t piv = k + 1;
            while (piv < N && base.is_zero(A[piv][k]))
                ++piv;
            if (piv == N)
                return base.zero();
            std::swap(A[k], A[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < N; ++i)
            for (std::size_t j = k + 1; j < N; ++j)
                A[i][j] = base.divexact(base.sub(base.mul(A[i][j], A[k][k]), base.mul(A[i][k], A[k][j])), prev);
        prev = A[k][k];
    }
    E d = A[N - 1][N - 1];
    return negate ? base.neg(d) : d;
}

/// All monic polynomials of degree d over a small field.
inline std::vector<ResiduePoly> monic_polys(const FiniteField& F, unsigned d)
{
    const auto q = mpz_get_ui(F.order().get_mpz_t());
    std::vector<ResiduePoly> out;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i)
        total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ResiduePoly p;
        std::uint64_t rest = idx;
        for (unsigned i = 0; i < d; ++i) {
            p.coeffs.push_back(F.from_index(rest % q));
            rest /= q;
        }
        p.coeffs.push_back(F.one());
        out.push_back(std::move(p));
    }
    return out;
}

/// Trial division by every monic polynomial of increasing degree.
inline std::vector<ResidueFactor> trial_division_factor(const FiniteField& F, ResiduePoly f)
{
    FieldPolyRing R(F);
    std::vector<ResidueFactor> out;
    for (unsigned d = 1; 2 * d <= f.coeffs.size() - 1; ++d) {
        for (const auto& g : monic_polys(F, d)) {
            unsigned mult = 0;
            while (R.rem(f, g).is_zero()) {
                f = R.quo(f, g);
                ++mult;
            }
            if (mult > 0)
                out.push_back({g, mult});
        }
    }
    if (f.coeffs.size() > 1)
        out.push_back({f, 1});
    return out;
}

/// Irreducible iff no monic factor of degree <= d/2.
inline bool brute_irreducible(const FiniteField& F, const ResiduePoly& f)
{
    FieldPolyRing R(F);
    const std::size_t n = f.coeffs.size() - 1;
    for (unsigned d = 1; 2 * d <= n; ++d)
        for (const auto& g : monic_polys(F, d))
            if (R.rem(f, g).is_zero())
                return false;
    return n >= 1;
}

/* Z[α] is p-maximal iff no θ = P(α)/p with P ≠ 0 mod p (deg P < n, digits
 * in [0, p)) is integral. θ is integral iff the characteristic polynomial
 * of the multiplication matrix of P(α) has its x^{n-j} coefficient
 * divisible by p^j; the characteristic polynomial comes from
 * Faddeev-LeVerrier over Q.
 */
inline std::vector<mpq_class> char_poly(const std::vector<std::vector<mpq_class>>& A)
{
    const std::size_t n = A.size();
    std::vector<mpq_class> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<mpq_class>> Mk(n, std::vector<mpq_class>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        // Mk = A·M_{k-1} + c_{n-k+1}·I
        std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mpq_class s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    s += A[i][l] * Mk[l][j];
                next[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i)
            next[i][i] += c[n - k + 1];
        Mk = std::move(next);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                tr += A[i][l] * Mk[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

inline bool brute_p_maximal(const Poly<mpz_class>& f, long p)
{
    const std::size_t n = f.coeffs.size() - 1;
    // columns: α^j reduced, j < 2n - 1
    std::vector<std::vector<mpz_class>> pw;
    std::vector<mpz_class> cur(n, 0);
    cur[0] = 1;
    for (std::size_t j = 0; j < 2 * n; ++j) {
        pw.push_back(cur);
        mpz_class top = cur[n - 1];
        for (std::size_t i = n - 1; i > 0; --i)
            cur[i] = cur[i - 1] - top * f.coeffs[i];
        cur[0] = -top * f.coeffs[0];
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<long> P(n);
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < n; ++i) {
            P[i] = static_cast<long>(r % static_cast<std::uint64_t>(p));
            r /= static_cast<std::uint64_t>(p);
        }
        // column j of the matrix is P(α)·α^j
        std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n, 0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (P[i] != 0)
                    for (std::size_t row = 0; row < n; ++row)
                        A[row][j] += mpq_class(pw[i + j][row] * P[i]);
        auto c = char_poly(A);
        bool integral = true;
        mpz_class pj = 1;
        for (std::size_t j = 1; j <= n && integral; ++j) {
            pj *= p;
            mpz_class num = c[n - j].get_num();
            if (c[n - j].get_den() != 1 || num % pj != 0)
                integral = false;
        }
        if (integral)
            return false;
    }
    return true;
}

} // namespace dedekind::oracle

#endif
