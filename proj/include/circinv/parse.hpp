/*
   Copyright 2026 the circinv developers

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

#ifndef CIRCINV_PARSE_HPP
#define CIRCINV_PARSE_HPP

#include <string>

#include "circinv/ideal.hpp"
#include "circinv/multipoly.hpp"

namespace circinv {

/// Parses an expression in the variables x<k> (basis X) or y<k> (basis Y)
/// with rational literals, `zeta` (optionally `zeta^k`), `+ - * ^` and
/// parentheses. Errors carry the 0-based input position.
Poly parse_poly(const std::string& text, unsigned n, Basis basis);

/// Parses an expression in the generator variables z<i> and w<j>.
GenPoly parse_genpoly(const std::string& text, unsigned n, unsigned p, unsigned q);

/// Canonical rendering, terms in descending graded-lex order.
/// parse(print(f)) == f.
std::string print_poly(const Poly& f);
std::string print_genpoly(const GenPoly& f);

}  // namespace circinv

#endif
