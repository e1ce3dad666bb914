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

#ifndef DEDEKIND_POLY_IO_HPP
#define DEDEKIND_POLY_IO_HPP

#include <string>
#include <string_view>

#include "dedekind/base.hpp"
#include "dedekind/poly.hpp"

namespace dedekind {

/* Grammar (whitespace ignored):
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := power ('*' power)*
 *   power  := atom ['^' integer]
 *   atom   := integer | 'x' | 't' | 'z' | '(' expr ')'
 * 't' is available over F_q(t) only, 'z' (generator of F_q) only when q is
 * not prime. Errors carry a 1-based column.
 */
Poly<mpz_class> parse_poly(const IntegerBase& base, std::string_view text);
Poly<FieldPoly> parse_poly(const FunctionBase& base, std::string_view text);

/// A polynomial in t over F_q (for the place π).
FieldPoly parse_tpoly(const FiniteField& Fq, std::string_view text);

std::string format_poly(const IntegerBase& base, const Poly<mpz_class>& p);
std::string format_poly(const FunctionBase& base, const Poly<FieldPoly>& p);

/// Largest exponent accepted after '^'.
inline constexpr unsigned max_exponent = 4096;

} // namespace dedekind

#endif
