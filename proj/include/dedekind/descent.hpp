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

#ifndef DEDEKIND_DESCENT_HPP
#define DEDEKIND_DESCENT_HPP

#include <cstddef>

#include "dedekind/base.hpp"
#include "dedekind/poly.hpp"

namespace dedekind {

/// f(x) = g(x^{p^d}) with d maximal, so g' != 0.
template <class E>
struct InseparabilityDescent {
    unsigned d = 0;
    std::size_t exponent = 1; // p^d
    MonicPoly<E> g;
};

template <ValuedRing B>
InseparabilityDescent<typename B::Elem> frobenius_descent(const B& base,
                                                          const MonicPoly<typename B::Elem>& f)
{
    using Elem = typename B::Elem;
    const std::uint64_t p = base.characteristic();
    const auto& c = f.poly().coeffs;
    if (p == 0 || f.degree() == 0)
        return {0, 1, f};

    auto all_divisible = [&](std::size_t m) {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (i % m != 0 && !base.is_zero(c[i]))
                return false;
        return true;
    };
    unsigned d = 0;
    std::size_t m = 1;
    while (m * p <= f.degree() && all_divisible(m * p)) {
        m *= p;
        ++d;
    }
    Poly<Elem> g;
    for (std::size_t i = 0; i < c.size(); i += m)
        g.coeffs.push_back(c[i]);
    return {d, m, MonicPoly<Elem>::checked(base, std::move(g))};
}

} // namespace dedekind

#endif
