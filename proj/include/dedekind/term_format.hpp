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

#ifndef DEDEKIND_TERM_FORMAT_HPP
#define DEDEKIND_TERM_FORMAT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dedekind {

struct Term {
    std::string coeff; // magnitude, never empty, never "0"
    bool negative = false;
    std::size_t exponent = 0;
};

/// No '+' or binary '-' outside parentheses.
bool is_atomic(std::string_view s) noexcept;

/* Render terms (highest exponent first) in the grammar accepted by the
 * parser: "3*x^2 - x + (t + 1)". An empty list renders as "0".
 */
std::string format_terms(const std::vector<Term>& terms, std::string_view var);

} // namespace dedekind

#endif
