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


#ifndef FSPLIT_SESSION_HPP
#define FSPLIT_SESSION_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/parse.hpp"

namespace fsplit {

/// A ring declaration with named ideals and polynomials:
///
///   session   = ring_decl { ideal_decl | poly_decl } ;
///   ring_decl = "ring" "p" "=" int "vars" "=" "[" ident { "," ident } "]"
///               [ "order" "=" ( "lex" | "grevlex" ) ] ;
///   ideal_decl = "ideal" ident "=" "[" [ poly { "," poly } ] "]" ;
///   poly_decl  = "poly" ident "=" poly ;
///
/// '#' starts a comment. Implicit multiplication stops at a line break, so
/// a poly_decl ends with its line unless an operator continues it.
struct Session {
  RingPtr ring;
  std::map<std::string, Ideal> ideals;
  NamedPolynomials polynomials;
  /// Declaration order of the ideals.
  std::vector<std::string> ideal_names;

  /// Throws Error for an unknown name.
  const Ideal& ideal(const std::string& name) const;
  /// Parses text in the session ring; named polynomials may be referenced.
  Polynomial polynomial(std::string_view text) const;
};

/// Throws ParseError (with line and column) on syntax errors, unknown
/// variables, repeated names and a non-prime modulus.
Session parse_session(std::string_view text);

}  // namespace fsplit

#endif  // FSPLIT_SESSION_HPP
