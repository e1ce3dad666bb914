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

#ifndef DEDEKIND_DEGREE_HPP
#define DEDEKIND_DEGREE_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

#include "dedekind/error.hpp"

namespace dedekind {

/* Polynomial degree. The zero polynomial has degree minus infinity, which
 * compares below every finite degree and carries no numeric value.
 */
class Degree {
public:
    static constexpr Degree minus_infinity() noexcept { return Degree(); }

    constexpr explicit Degree(std::size_t d) noexcept : finite_(true), value_(d) {}

    constexpr bool is_minus_infinity() const noexcept { return !finite_; }

    std::size_t value() const
    {
        if (!finite_)
            internal_error("degree of the zero polynomial has no value");
        return value_;
    }

    constexpr auto operator<=>(const Degree&) const noexcept = default;

    friend std::ostream& operator<<(std::ostream& os, const Degree& d)
    {
        if (d.finite_)
            return os << d.value_;
        return os << "-inf";
    }

private:
    constexpr Degree() noexcept = default;

    bool finite_ = false;
    std::size_t value_ = 0;
};

/* A value in Z ∪ {∞}; infinity is the valuation of zero and compares above
 * every integer.
 */
class Valuation {
public:
    static constexpr Valuation infinity() noexcept { return Valuation(); }

    constexpr explicit Valuation(long v) noexcept : infinite_(false), value_(v) {}

    constexpr bool is_infinite() const noexcept { return infinite_; }

    long value() const
    {
        if (infinite_)
            internal_error("infinite valuation has no finite value");
        return value_;
    }

    constexpr auto operator<=>(const Valuation&) const noexcept = default;
    constexpr bool operator==(const Valuation&) const noexcept = default;

    constexpr bool operator==(long v) const noexcept { return !infinite_ && value_ == v; }

    friend constexpr Valuation operator+(Valuation a, Valuation b) noexcept
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return Valuation(a.value_ + b.value_);
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v)
    {
        return os << v.to_string();
    }

private:
    constexpr Valuation() noexcept = default;

    bool infinite_ = true;
    long value_ = 0;
};

} // namespace dedekind

#endif
