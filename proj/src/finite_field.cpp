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

#include "dedekind/finite_field.hpp"

#include <algorithm>

#include "dedekind/error.hpp"
#include "dedekind/field_poly.hpp"
#include "dedekind/residue_factor.hpp"
#include "dedekind/term_format.hpp"

namespace dedekind {

std::shared_ptr<const FiniteField> FiniteField::prime_field(Digit p)
{
    if (p < 2 || p >= max_characteristic)
        throw Error(ErrorCode::invalid_base, "characteristic " + std::to_string(p) + " out of range");
    mpz_class pz;
    mpz_set_ui(pz.get_mpz_t(), p);
    if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
        throw Error(ErrorCode::invalid_base, std::to_string(p) + " is not prime");
    std::shared_ptr<FiniteField> F(new FiniteField());
    F->p_ = p;
    F->dim_ = 1;
    return F;
}

std::shared_ptr<const FiniteField> FiniteField::extension(
    std::shared_ptr<const FiniteField> base, std::vector<Elem> modulus, std::string generator)
{
    if (!base || modulus.size() < 2 || !base->is_one(modulus.back()))
        throw Error(ErrorCode::invalid_base, "extension modulus must be monic of degree >= 1");
    std::shared_ptr<FiniteField> F(new FiniteField());
    F->p_ = base->p_;
    F->dim_ = (modulus.size() - 1) * base->dim_;
    if (base->is_prime_field()) {
        for (const Elem& c : modulus)
            F->flat_modulus_.push_back(c[0]);
    }
    F->base_ = std::move(base);
    F->modulus_ = std::move(modulus);
    F->generator_ = std::move(generator);
    return F;
}

std::shared_ptr<const FiniteField> FiniteField::galois_field(Digit p, unsigned e)
{
    auto Fp = prime_field(p);
    if (e == 0)
        throw Error(ErrorCode::invalid_base, "extension degree must be >= 1");
    if (e == 1)
        return Fp;
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), p, e);
    FieldPolyRing R(*Fp);
    // Counting upward enumerates (c_{e-1}, ..., c_0) lexicographically.
    for (mpz_class index = 0; index < count; ++index) {
        std::vector<Elem> coeffs;
        mpz_class rest = index;
        for (unsigned i = 0; i < e; ++i) {
            mpz_class digit = rest % p;
            rest /= p;
            coeffs.push_back(Fp->from_mpz(digit));
        }
        coeffs.push_back(Fp->one());
        FieldPoly m = R.from_coeffs(coeffs);
        if (irreducible_test(*Fp, m))
            return extension(Fp, m.coeffs, "z");
    }
    internal_error("no irreducible polynomial found");
}

mpz_class FiniteField::order() const
{
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, dim_);
    return q;
}

FiniteField::Elem FiniteField::one() const
{
    Elem e(dim_, 0);
    e[0] = 1;
    return e;
}

FiniteField::Elem FiniteField::from_integer(long long n) const
{
    Elem e(dim_, 0);
    if (n >= 0) {
        e[0] = static_cast<Digit>(n) % p_;
    } else {
        Digit m = static_cast<Digit>(-(n + 1)) % p_;
        e[0] = p_ - 1 - m;
    }
    return e;
}

FiniteField::Elem FiniteField::from_mpz(const mpz_class& n) const
{
    Elem e(dim_, 0);
    e[0] = mpz_fdiv_ui(n.get_mpz_t(), p_);
    return e;
}

FiniteField::Elem FiniteField::generator_element() const
{
    if (is_prime_field())
        internal_error("prime field has no generator");
    std::vector<Elem> parts(relative_degree(), base_->zero());
    if (relative_degree() >= 2)
        parts[1] = base_->one();
    else
        parts[0] = base_->neg(modulus_[0]);
    return join(parts);
}

FiniteField::Elem FiniteField::embed(const Elem& b) const
{
    if (is_prime_field())
        return b;
    Elem e(dim_, 0);
    std::copy(b.begin(), b.end(), e.begin());
    return e;
}

bool FiniteField::is_zero(const Elem& a) const noexcept
{
    return std::all_of(a.begin(), a.end(), [](Digit d) { return d == 0; });
}

bool FiniteField::is_one(const Elem& a) const noexcept
{
    if (a.empty() || a[0] != 1)
        return false;
    return std::all_of(a.begin() + 1, a.end(), [](Digit d) { return d == 0; });
}

bool FiniteField::in_prime_field(const Elem& a) const noexcept
{
    return std::all_of(a.begin() + 1, a.end(), [](Digit d) { return d == 0; });
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const
{
    Elem c(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        c[i] = add_digit(a[i], b[i]);
    return c;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const
{
    Elem c(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        c[i] = sub_digit(a[i], b[i]);
    return c;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const
{
    Elem c(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        c[i] = a[i] == 0 ? 0 : p_ - a[i];
    return c;
}

FiniteField::Elem FiniteField::mul_over_prime(const Elem& a, const Elem& b) const
{
    const std::size_t d = dim_;
    std::vector<Digit> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] = add_digit(prod[i + j], mul_digit(a[i], b[j]));
    }
    for (std::size_t k = 2 * d - 2; k >= d; --k) {
        Digit c = prod[k];
        if (c != 0) {
            for (std::size_t i = 0; i < d; ++i)
                prod[k - d + i] = sub_digit(prod[k - d + i], mul_digit(c, flat_modulus_[i]));
        }
    }
    return Elem(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const
{
    if (is_prime_field())
        return Elem{mul_digit(a[0], b[0])};
    if (base_->is_prime_field())
        return mul_over_prime(a, b);
    const FiniteField& B = *base_;
    const std::size_t d = relative_degree();
    auto A = chunks(a);
    auto Bc = chunks(b);
    std::vector<Elem> prod(2 * d - 1, B.zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (B.is_zero(A[i]))
            continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] = B.add(prod[i + j], B.mul(A[i], Bc[j]));
    }
    for (std::size_t k = 2 * d - 2; k >= d; --k) {
        if (B.is_zero(prod[k]))
            continue;
        for (std::size_t i = 0; i < d; ++i)
            prod[k - d + i] = B.sub(prod[k - d + i], B.mul(prod[k], modulus_[i]));
    }
    prod.resize(d);
    return join(prod);
}

FiniteField::Digit FiniteField::inv_digit(Digit a) const
{
    if (a == 0)
        internal_error("inverse of zero");
    __int128 t = 0, newt = 1;
    __int128 r = p_, newr = a;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0)
        t += p_;
    return static_cast<Digit>(t);
}

FiniteField::Elem FiniteField::inv(const Elem& a) const
{
    if (is_prime_field())
        return Elem{inv_digit(a[0])};
    if (is_zero(a))
        internal_error("inverse of zero");
    const FiniteField& B = *base_;
    FieldPolyRing R(B);
    FieldPoly pa = R.from_coeffs(chunks(a));
    FieldPoly pm = R.from_coeffs(modulus_);
    FieldXgcd g = R.xgcd(pa, pm);
    if (g.gcd.degree() != Degree(0))
        internal_error("extension modulus is not irreducible");
    // gcd is monic, hence 1.
    std::vector<Elem> parts = g.s.coeffs;
    parts.resize(relative_degree(), B.zero());
    return join(parts);
}

FiniteField::Elem FiniteField::pow(const Elem& a, const mpz_class& n) const
{
    if (n < 0)
        return pow(inv(a), -n);
    Elem result = one();
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul(result, result);
        if (mpz_tstbit(n.get_mpz_t(), i))
            result = mul(result, a);
    }
    return result;
}

FiniteField::Elem FiniteField::pth_root(const Elem& a) const
{
    Elem b = a;
    mpz_class p;
    mpz_set_ui(p.get_mpz_t(), p_);
    for (std::size_t i = 1; i < dim_; ++i)
        b = pow(b, p);
    return b;
}

int FiniteField::compare(const Elem& a, const Elem& b) const noexcept
{
    for (std::size_t i = dim_; i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

FiniteField::Elem FiniteField::random(std::mt19937_64& rng) const
{
    Elem e(dim_);
    for (auto& d : e)
        d = rng() % p_;
    return e;
}

FiniteField::Elem FiniteField::from_index(std::uint64_t index) const
{
    Elem e(dim_, 0);
    for (std::size_t i = 0; i < dim_ && index != 0; ++i) {
        e[i] = index % p_;
        index /= p_;
    }
    return e;
}

std::vector<FiniteField::Elem> FiniteField::chunks(const Elem& a) const
{
    if (is_prime_field())
        return {a};
    const std::size_t w = base_->dim_;
    std::vector<Elem> parts;
    parts.reserve(relative_degree());
    for (std::size_t j = 0; j < relative_degree(); ++j)
        parts.emplace_back(a.begin() + static_cast<std::ptrdiff_t>(j * w),
                           a.begin() + static_cast<std::ptrdiff_t>((j + 1) * w));
    return parts;
}

FiniteField::Elem FiniteField::join(const std::vector<Elem>& parts) const
{
    if (is_prime_field())
        return parts.at(0);
    Elem e;
    e.reserve(dim_);
    for (const Elem& c : parts)
        e.insert(e.end(), c.begin(), c.end());
    e.resize(dim_, 0);
    return e;
}

std::string FiniteField::to_string(const Elem& a) const
{
    if (is_prime_field())
        return std::to_string(a[0]);
    auto parts = chunks(a);
    std::vector<Term> terms;
    for (std::size_t j = parts.size(); j-- > 0;) {
        if (base_->is_zero(parts[j]))
            continue;
        terms.push_back(Term{base_->to_string(parts[j]), false, j});
    }
    return format_terms(terms, generator_);
}

} // namespace dedekind
