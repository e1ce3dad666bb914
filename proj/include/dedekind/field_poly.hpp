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

#ifndef DEDEKIND_FIELD_POLY_HPP
#define DEDEKIND_FIELD_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dedekind/degree.hpp"
#include "dedekind/finite_field.hpp"

namespace dedekind {

/* Dense univariate polynomial over a finite field, lowest degree first.
 * Normalized values carry no trailing zero coefficient; the zero polynomial
 * is the empty vector. The field is not stored: operations go through a
 * FieldPolyRing.
 */
struct FieldPoly {
    std::vector<FiniteField::Elem> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }
    Degree degree() const noexcept
    {
        return coeffs.empty() ? Degree::minus_infinity() : Degree(coeffs.size() - 1);
    }

    friend bool operator==(const FieldPoly&, const FieldPoly&) = default;
};

/// Residue polynomials live in k_ν[x]; same representation.
using ResiduePoly = FieldPoly;

struct FieldDivMod {
    FieldPoly quotient;
    FieldPoly remainder;
};

struct FieldXgcd {
    FieldPoly gcd; // monic, or zero when both inputs are zero
    FieldPoly s;
    FieldPoly t;   // s*a + t*b = gcd
};

class FieldPolyRing {
public:
    explicit FieldPolyRing(const FiniteField& field) noexcept : F_(&field) {}

    const FiniteField& field() const noexcept { return *F_; }

    FieldPoly zero() const { return {}; }
    FieldPoly one() const;
    FieldPoly x() const;
    FieldPoly constant(const FiniteField::Elem& c) const;
    FieldPoly monomial(const FiniteField::Elem& c, std::size_t k) const;
    FieldPoly from_coeffs(std::vector<FiniteField::Elem> coeffs) const;

    void normalize(FieldPoly& a) const;
    const FiniteField::Elem& lc(const FieldPoly& a) const;
    bool is_one(const FieldPoly& a) const;
    bool is_monic(const FieldPoly& a) const;

    FieldPoly add(const FieldPoly& a, const FieldPoly& b) const;
    FieldPoly sub(const FieldPoly& a, const FieldPoly& b) const;
    FieldPoly neg(const FieldPoly& a) const;
    FieldPoly mul(const FieldPoly& a, const FieldPoly& b) const;
    FieldPoly scale(const FieldPoly& a, const FiniteField::Elem& c) const;
    FieldPoly pow(const FieldPoly& a, unsigned n) const;
    FieldPoly make_monic(const FieldPoly& a) const;

    FieldDivMod divmod(const FieldPoly& a, const FieldPoly& b) const;
    FieldPoly rem(const FieldPoly& a, const FieldPoly& b) const;
    FieldPoly quo(const FieldPoly& a, const FieldPoly& b) const;
    /// Quotient; throws an internal error when b does not divide a.
    FieldPoly divexact(const FieldPoly& a, const FieldPoly& b) const;

    FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) const;
    FieldXgcd xgcd(const FieldPoly& a, const FieldPoly& b) const;

    FieldPoly mulmod(const FieldPoly& a, const FieldPoly& b, const FieldPoly& m) const;
    FieldPoly powmod(const FieldPoly& a, const mpz_class& n, const FieldPoly& m) const;

    FieldPoly derivative(const FieldPoly& a) const;
    /// b with b^p = a; requires derivative(a) == 0.
    FieldPoly pth_root(const FieldPoly& a) const;
    FiniteField::Elem evaluate(const FieldPoly& a, const FiniteField::Elem& x) const;

    /// Degree first, then coefficients from the top.
    int compare(const FieldPoly& a, const FieldPoly& b) const;

    std::string to_string(const FieldPoly& a, const std::string& var) const;

private:
    const FiniteField* F_;
};

} // namespace dedekind

#endif
