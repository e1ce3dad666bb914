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

#ifndef DEDEKIND_FINITE_FIELD_HPP
#define DEDEKIND_FINITE_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace dedekind {

/* A finite field given as a tower F_p ⊂ B ⊂ B[y]/(m(y)).
 *
 * Elements are flat vectors of F_p digits of length dimension(): an element
 * of B[y]/(m) with coefficients c_0..c_{d-1} in B is stored as the
 * concatenation of the digit vectors of c_0, ..., c_{d-1}. Every digit is the
 * least nonnegative residue mod p, so equal elements have equal
 * representations.
 *
 * Instances are immutable and shared through shared_ptr<const FiniteField>.
 */
class FiniteField {
public:
    using Digit = std::uint64_t;
    using Elem = boost::container::small_vector<Digit, 6>;

    /// Largest supported characteristic.
    static constexpr Digit max_characteristic = Digit(1) << 62;

    static std::shared_ptr<const FiniteField> prime_field(Digit p);

    /* F_p[y]/(m) over `base`, m monic over base of degree >= 1. The caller
     * guarantees irreducibility of m. `generator` names y when printing.
     */
    static std::shared_ptr<const FiniteField> extension(
        std::shared_ptr<const FiniteField> base, std::vector<Elem> modulus,
        std::string generator);

    /* F_{p^e}. For e > 1 the modulus is the smallest monic irreducible of
     * degree e over F_p, comparing coefficient vectors from the top.
     */
    static std::shared_ptr<const FiniteField> galois_field(Digit p, unsigned e);

    Digit characteristic() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return dim_; }
    /// Degree over the immediate base (1 for a prime field).
    std::size_t relative_degree() const noexcept { return modulus_.empty() ? 1 : modulus_.size() - 1; }
    bool is_prime_field() const noexcept { return base_ == nullptr; }
    const FiniteField* base() const noexcept { return base_.get(); }
    std::shared_ptr<const FiniteField> base_ptr() const noexcept { return base_; }
    /// Monic modulus over base(), lowest coefficient first.
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }
    const std::string& generator() const noexcept { return generator_; }
    mpz_class order() const;

    Elem zero() const { return Elem(dim_, 0); }
    Elem one() const;
    Elem from_integer(long long n) const;
    Elem from_mpz(const mpz_class& n) const;
    /// Image of the base generator chain: y itself (requires !is_prime_field()).
    Elem generator_element() const;
    /// Embed an element of base() as a constant.
    Elem embed(const Elem& b) const;

    bool is_zero(const Elem& a) const noexcept;
    bool is_one(const Elem& a) const noexcept;
    /// True when a lies in the prime subfield.
    bool in_prime_field(const Elem& a) const noexcept;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, const mpz_class& n) const;
    /// Unique b with b^p = a.
    Elem pth_root(const Elem& a) const;

    /// Total order: compare digit vectors from the most significant chunk.
    int compare(const Elem& a, const Elem& b) const noexcept;

    Elem random(std::mt19937_64& rng) const;
    /// Element with base-p digit expansion of `index` (index < order()).
    Elem from_index(std::uint64_t index) const;

    /* Split into coefficients over base(); sizes relative_degree() and
     * base()->dimension().
     */
    std::vector<Elem> chunks(const Elem& a) const;
    Elem join(const std::vector<Elem>& parts) const;

    std::string to_string(const Elem& a) const;

private:
    FiniteField() = default;

    Digit add_digit(Digit a, Digit b) const noexcept
    {
        Digit s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Digit sub_digit(Digit a, Digit b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Digit mul_digit(Digit a, Digit b) const noexcept
    {
        return static_cast<Digit>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Digit inv_digit(Digit a) const;

    Elem mul_over_prime(const Elem& a, const Elem& b) const;

    Digit p_ = 2;
    std::size_t dim_ = 1;
    std::shared_ptr<const FiniteField> base_;
    std::vector<Elem> modulus_;
    std::vector<Digit> flat_modulus_; // modulus digits when base_ is a prime field
    std::string generator_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

} // namespace dedekind

#endif
