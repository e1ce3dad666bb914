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

#ifndef DEDEKIND_TESTS_SUPPORT_HPP
#define DEDEKIND_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>

#include "dedekind/base.hpp"
#include "dedekind/poly.hpp"
#include "dedekind/poly_io.hpp"

namespace dedekind::test {

inline IntegerBase Q(long p)
{
    return IntegerBase(mpz_class(p));
}

/// F_{p^e}(t) at the place pi (default t).
inline FunctionBase Ft(std::uint64_t p, unsigned e = 1, const std::string& pi = "t")
{
    auto Fq = FiniteField::galois_field(p, e);
    return FunctionBase(Fq, parse_tpoly(*Fq, pi));
}

template <class B>
Poly<typename B::Elem> P(const B& base, const std::string& s)
{
    return parse_poly(base, s);
}

template <class B>
MonicPoly<typename B::Elem> M(const B& base, const std::string& s)
{
    return MonicPoly<typename B::Elem>::checked(base, parse_poly(base, s));
}

template <class B>
std::string S(const B& base, const Poly<typename B::Elem>& p)
{
    return format_poly(base, p);
}

inline ResiduePoly Rp(const FiniteField& F, const std::string& s)
{
    // residue polynomials are written in t and reinterpreted in x
    return parse_tpoly(F, s);
}

/// Random base element of small size: |a| < bound over Z, t-degree < bound over F_q(t).
inline mpz_class random_elem(const IntegerBase&, std::mt19937_64& rng, unsigned bound)
{
    return mpz_class(static_cast<long>(rng() % (2 * bound + 1)) - static_cast<long>(bound));
}

inline FieldPoly random_elem(const FunctionBase& base, std::mt19937_64& rng, unsigned bound)
{
    const auto& Fq = base.constant_field();
    FieldPolyRing R(Fq);
    std::vector<FiniteField::Elem> c;
    const unsigned len = static_cast<unsigned>(rng() % (bound + 1));
    for (unsigned i = 0; i < len; ++i)
        c.push_back(Fq.random(rng));
    return R.from_coeffs(std::move(c));
}

template <class B>
Poly<typename B::Elem> random_poly(const B& base, std::mt19937_64& rng, std::size_t deg, unsigned bound)
{
    PolyRing<B> R(base);
    std::vector<typename B::Elem> c;
    for (std::size_t i = 0; i <= deg; ++i)
        c.push_back(random_elem(base, rng, bound));
    return R.make(std::move(c));
}

template <class B>
MonicPoly<typename B::Elem> random_monic(const B& base, std::mt19937_64& rng, std::size_t deg, unsigned bound)
{
    auto p = random_poly(base, rng, deg == 0 ? 0 : deg - 1, bound);
    p = PolyRing<B>(base).add(p, PolyRing<B>(base).monomial(base.one(), deg));
    return MonicPoly<typename B::Elem>::checked(base, p);
}

} // namespace dedekind::test

#endif
