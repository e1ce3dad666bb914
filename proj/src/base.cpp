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

#include "dedekind/base.hpp"

#include "dedekind/error.hpp"
#include "dedekind/residue_factor.hpp"

namespace dedekind {

IntegerBase::IntegerBase(const mpz_class& p) : p_(p)
{
    if (p_ < 2 || p_ >= mpz_class(std::to_string(FiniteField::max_characteristic)))
        throw Error(ErrorCode::invalid_base, "prime " + p_.get_str() + " out of range");
    if (mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0)
        throw Error(ErrorCode::invalid_base, p_.get_str() + " is not prime");
    residue_ = FiniteField::prime_field(mpz_get_ui(p_.get_mpz_t()));
}

IntegerBase::Elem IntegerBase::from_integer(long long n) const
{
    mpz_class z;
    if (n >= 0) {
        mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    } else {
        mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(-(n + 1)));
        z = -z - 1;
    }
    return z;
}

IntegerBase::Elem IntegerBase::divexact(const Elem& a, const Elem& b) const
{
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        internal_error("inexact integer division");
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Valuation IntegerBase::valuation(const Elem& a) const
{
    if (sgn(a) == 0)
        return Valuation::infinity();
    mpz_class rest;
    auto v = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
    return Valuation(static_cast<long>(v));
}

IntegerBase::Elem IntegerBase::prime_power(unsigned k) const
{
    Elem r;
    mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), k);
    return r;
}

IntegerBase::Elem IntegerBase::mod(const Elem& a, const Elem& m) const
{
    Elem r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

IntegerBase::Elem IntegerBase::lift(const FiniteField::Elem& r) const
{
    Elem z;
    mpz_set_ui(z.get_mpz_t(), r[0]);
    return z;
}

std::pair<bool, std::string> IntegerBase::signed_magnitude(const Elem& a) const
{
    if (sgn(a) < 0)
        return {true, mpz_class(-a).get_str()};
    return {false, a.get_str()};
}

std::string IntegerBase::describe() const
{
    return "Q, p = " + p_.get_str();
}

FunctionBase::FunctionBase(FieldPtr constant_field, FieldPoly pi)
    : Fq_(std::move(constant_field)), pi_(std::move(pi))
{
    if (!Fq_)
        throw Error(ErrorCode::invalid_base, "missing constant field");
    FieldPolyRing R(*Fq_);
    R.normalize(pi_);
    if (!R.is_monic(pi_) || pi_.coeffs.size() < 2)
        throw Error(ErrorCode::invalid_base, "pi must be monic of degree >= 1 in t");
    if (!irreducible_test(*Fq_, pi_))
        throw Error(ErrorCode::invalid_base, "pi = " + R.to_string(pi_, "t") + " is not irreducible");
    if (pi_.coeffs.size() == 2)
        residue_ = Fq_;
    else
        residue_ = FiniteField::extension(Fq_, pi_.coeffs, "t");
}

FunctionBase::Elem FunctionBase::from_integer(long long n) const
{
    return t_ring().constant(Fq_->from_integer(n));
}

Valuation FunctionBase::valuation(const Elem& a) const
{
    if (a.is_zero())
        return Valuation::infinity();
    FieldPolyRing R = t_ring();
    long v = 0;
    Elem cur = a;
    for (;;) {
        FieldDivMod qr = R.divmod(cur, pi_);
        if (!qr.remainder.is_zero())
            return Valuation(v);
        ++v;
        cur = std::move(qr.quotient);
    }
}

FiniteField::Elem FunctionBase::reduce(const Elem& a) const
{
    FieldPoly r = t_ring().rem(a, pi_);
    if (residue_ == Fq_)
        return r.is_zero() ? Fq_->zero() : r.coeffs[0];
    std::vector<FiniteField::Elem> parts = r.coeffs;
    parts.resize(residue_->relative_degree(), Fq_->zero());
    return residue_->join(parts);
}

FunctionBase::Elem FunctionBase::lift(const FiniteField::Elem& r) const
{
    if (residue_ == Fq_)
        return t_ring().constant(r);
    return t_ring().from_coeffs(residue_->chunks(r));
}

std::string FunctionBase::describe() const
{
    std::string s = "F_" + std::to_string(Fq_->characteristic());
    if (Fq_->dimension() > 1)
        s += "^" + std::to_string(Fq_->dimension());
    return s + "(t), pi = " + to_string(pi_);
}

bool operator==(const FunctionBase& a, const FunctionBase& b)
{
    return a.Fq_->characteristic() == b.Fq_->characteristic() &&
           a.Fq_->dimension() == b.Fq_->dimension() && a.pi_ == b.pi_;
}

} // namespace dedekind
