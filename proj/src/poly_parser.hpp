/*
   Copyright 2026 The fsplit Authors

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

#ifndef FSPLIT_DETAIL_POLY_PARSER_HPP
#define FSPLIT_DETAIL_POLY_PARSER_HPP

#include "fsplit/parse.hpp"
#include "lexer.hpp"

namespace fsplit::detail {

/// Parses one polynomial from the token stream, stopping at the first token
/// that cannot continue it (a ',' or ']' inside a session file). Implicit
/// multiplication does not continue onto a new line.
Polynomial parse_polynomial_tokens(Lexer& lex, const RingPtr& ring, const NamedPolynomials* named);

}  // namespace fsplit::detail

#endif  // FSPLIT_DETAIL_POLY_PARSER_HPP
