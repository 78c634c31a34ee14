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

#ifndef FSPLIT_PARSE_HPP
#define FSPLIT_PARSE_HPP

#include <map>
#include <string>
#include <string_view>

#include "fsplit/polynomial.hpp"

namespace fsplit {

using NamedPolynomials = std::map<std::string, Polynomial>;

/// Parses the polynomial text syntax: identifiers are ring variables (or
/// entries of `named`), `^` raises to a non-negative integer power, `*` is
/// optional between factors, parentheses group, integers reduce mod p.
/// Example: `x11*x22 - x12*x21`, `3x^2 (y + 1)`.
///
/// Throws ParseError carrying a 1-based line and column.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, const NamedPolynomials* named = nullptr);

}  // namespace fsplit

#endif  // FSPLIT_PARSE_HPP
