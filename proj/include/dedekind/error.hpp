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

#ifndef DEDEKIND_ERROR_HPP
#define DEDEKIND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dedekind {

enum class ErrorCode {
    syntax_error,
    invalid_base,
    not_monic,
    constant_polynomial,
    zero_polynomial,
    non_integral,
    reducible_input,
    criterion_false,
    precision_exhausted,
    precondition,
    usage,
    internal,
};

/// Machine-readable spelling used in CLI reports.
constexpr std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::invalid_base: return "invalid_base";
    case ErrorCode::not_monic: return "not_monic";
    case ErrorCode::constant_polynomial: return "constant_polynomial";
    case ErrorCode::zero_polynomial: return "zero_polynomial";
    case ErrorCode::non_integral: return "non_integral";
    case ErrorCode::reducible_input: return "reducible_input";
    case ErrorCode::criterion_false: return "criterion_false";
    case ErrorCode::precision_exhausted: return "precision_exhausted";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::usage: return "usage";
    case ErrorCode::internal: return "internal";
    }
    return "internal";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a valuation cannot be certified at the working precision.
class PrecisionExhausted : public Error {
public:
    PrecisionExhausted(unsigned precision, const std::string& what)
        : Error(ErrorCode::precision_exhausted, what), precision_(precision)
    {
    }

    unsigned precision() const noexcept { return precision_; }

private:
    unsigned precision_;
};

[[noreturn]] inline void internal_error(const std::string& what)
{
    throw Error(ErrorCode::internal, what);
}

} // namespace dedekind

#endif
