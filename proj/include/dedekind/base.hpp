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

#ifndef DEDEKIND_BASE_HPP
#define DEDEKIND_BASE_HPP

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "dedekind/degree.hpp"
#include "dedekind/field_poly.hpp"
#include "dedekind/finite_field.hpp"

namespace dedekind {

enum class BaseKind { rational_field, function_field };

/* The valuation ring R_ν of a discretely valued field together with its
 * residue field. Value group is Z and σ = min(Γ⁺) = 1 for every model.
 */
template <class B>
concept ValuedRing = requires(const B& b, const typename B::Elem& a, unsigned k,
                              const FiniteField::Elem& r, long long n) {
    typename B::Elem;
    { b.zero() } -> std::same_as<typename B::Elem>;
    { b.one() } -> std::same_as<typename B::Elem>;
    { b.from_integer(n) } -> std::same_as<typename B::Elem>;
    { b.add(a, a) } -> std::same_as<typename B::Elem>;
    { b.sub(a, a) } -> std::same_as<typename B::Elem>;
    { b.mul(a, a) } -> std::same_as<typename B::Elem>;
    { b.neg(a) } -> std::same_as<typename B::Elem>;
    { b.divexact(a, a) } -> std::same_as<typename B::Elem>;
    { b.is_zero(a) } -> std::same_as<bool>;
    { b.is_one(a) } -> std::same_as<bool>;
    { b.valuation(a) } -> std::same_as<Valuation>;
    { b.prime() } -> std::convertible_to<const typename B::Elem&>;
    { b.prime_power(k) } -> std::same_as<typename B::Elem>;
    { b.mod(a, a) } -> std::same_as<typename B::Elem>;
    { b.residue_field() } -> std::convertible_to<const FiniteField&>;
    { b.reduce(a) } -> std::same_as<FiniteField::Elem>;
    { b.lift(r) } -> std::same_as<typename B::Elem>;
    { b.characteristic() } -> std::same_as<std::uint64_t>;
    { b.to_string(a) } -> std::same_as<std::string>;
    { b.signed_magnitude(a) } -> std::same_as<std::pair<bool, std::string>>;
    { b.sigma() } -> std::same_as<long>;
};

/// ℚ with the p-adic valuation; R_ν = Z_(p), elements handled as integers.
class IntegerBase {
public:
    using Elem = mpz_class;
    static constexpr BaseKind kind = BaseKind::rational_field;

    explicit IntegerBase(const mpz_class& p);

    const mpz_class& prime() const noexcept { return p_; }
    long sigma() const noexcept { return 1; }
    std::uint64_t characteristic() const noexcept { return 0; }
    const FiniteField& residue_field() const noexcept { return *residue_; }
    FieldPtr residue_field_ptr() const noexcept { return residue_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(long long n) const;
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem divexact(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    Valuation valuation(const Elem& a) const;
    Elem prime_power(unsigned k) const;
    /// Least nonnegative residue of a modulo m (m > 0).
    Elem mod(const Elem& a, const Elem& m) const;

    FiniteField::Elem reduce(const Elem& a) const { return residue_->from_mpz(a); }
    Elem lift(const FiniteField::Elem& r) const;

    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::pair<bool, std::string> signed_magnitude(const Elem& a) const;
    std::string describe() const;

    friend bool operator==(const IntegerBase& a, const IntegerBase& b) { return a.p_ == b.p_; }

private:
    mpz_class p_;
    FieldPtr residue_;
};

/* F_q(t) with the π-adic valuation for a monic irreducible π ∈ F_q[t];
 * elements of the valuation ring are handled as polynomials in t.
 * The residue field is F_q[t]/(π), represented by remainders of t-degree
 * below deg π (when deg π = 1 it is F_q itself).
 */
class FunctionBase {
public:
    using Elem = FieldPoly;
    static constexpr BaseKind kind = BaseKind::function_field;

    /// Throws invalid_base unless pi is monic irreducible of degree >= 1 over Fq.
    FunctionBase(FieldPtr constant_field, FieldPoly pi);

    const FieldPoly& prime() const noexcept { return pi_; }
    long sigma() const noexcept { return 1; }
    std::uint64_t characteristic() const noexcept { return Fq_->characteristic(); }
    unsigned constant_field_degree() const noexcept { return static_cast<unsigned>(Fq_->dimension()); }
    const FiniteField& constant_field() const noexcept { return *Fq_; }
    FieldPtr constant_field_ptr() const noexcept { return Fq_; }
    FieldPolyRing t_ring() const noexcept { return FieldPolyRing(*Fq_); }
    const FiniteField& residue_field() const noexcept { return *residue_; }
    FieldPtr residue_field_ptr() const noexcept { return residue_; }

    Elem zero() const { return {}; }
    Elem one() const { return t_ring().one(); }
    Elem from_integer(long long n) const;
    Elem t() const { return t_ring().x(); }
    Elem add(const Elem& a, const Elem& b) const { return t_ring().add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return t_ring().sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return t_ring().mul(a, b); }
    Elem neg(const Elem& a) const { return t_ring().neg(a); }
    Elem divexact(const Elem& a, const Elem& b) const { return t_ring().divexact(a, b); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return t_ring().is_one(a); }

    Valuation valuation(const Elem& a) const;
    Elem prime_power(unsigned k) const { return t_ring().pow(pi_, k); }
    Elem mod(const Elem& a, const Elem& m) const { return t_ring().rem(a, m); }

    FiniteField::Elem reduce(const Elem& a) const;
    Elem lift(const FiniteField::Elem& r) const;

    std::string to_string(const Elem& a) const { return t_ring().to_string(a, "t"); }
    std::pair<bool, std::string> signed_magnitude(const Elem& a) const { return {false, to_string(a)}; }
    std::string describe() const;

    friend bool operator==(const FunctionBase& a, const FunctionBase& b);

private:
    FieldPtr Fq_;
    FieldPoly pi_;
    FieldPtr residue_;
};

static_assert(ValuedRing<IntegerBase>);
static_assert(ValuedRing<FunctionBase>);

using ValuedBase = std::variant<IntegerBase, FunctionBase>;

} // namespace dedekind

#endif
