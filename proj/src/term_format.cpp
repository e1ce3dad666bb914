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

#include "dedekind/term_format.hpp"

namespace dedekind {

bool is_atomic(std::string_view s) noexcept
{
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        } else if (depth == 0 && (c == '+' || (c == '-' && i > 0))) {
            return false;
        }
    }
    return true;
}

std::string format_terms(const std::vector<Term>& terms, std::string_view var)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const Term& term : terms) {
        if (first)
            out += term.negative ? "-" : "";
        else
            out += term.negative ? " - " : " + ";
        first = false;

        std::string power;
        if (term.exponent >= 1) {
            power = std::string(var);
            if (term.exponent > 1)
                power += "^" + std::to_string(term.exponent);
        }
        if (power.empty()) {
            out += (!term.negative || is_atomic(term.coeff)) ? term.coeff : "(" + term.coeff + ")";
        } else if (term.coeff == "1") {
            out += power;
        } else if (is_atomic(term.coeff)) {
            out += term.coeff + "*" + power;
        } else {
            out += "(" + term.coeff + ")*" + power;
        }
    }
    return out;
}

} // namespace dedekind
