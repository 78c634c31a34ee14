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

#include "fsplit/parse.hpp"

#include "fsplit/errors.hpp"
#include "lexer.hpp"
#include "poly_parser.hpp"

namespace fsplit {

namespace detail {

namespace {

Coeff parse_number(const Token& t, const PrimeField& field) {
  std::uint64_t v = 0;
  for (char c : t.text) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % field.characteristic();
  return static_cast<Coeff>(v);
}

std::uint64_t parse_exponent(const Token& t) {
  if (t.kind != Token::Kind::Number) {
    throw ParseError("expected a non-negative integer exponent", t.line, t.column);
  }
  if (t.text.size() > 9) throw ParseError("exponent too large", t.line, t.column);
  return std::stoull(t.text);
}

bool starts_factor(const Token& t) {
  return t.kind == Token::Kind::Identifier || t.kind == Token::Kind::Number ||
         (t.kind == Token::Kind::Symbol && t.text == "(");
}

Polynomial parse_sum(Lexer& lex, const RingPtr& ring, const NamedPolynomials* named);

Polynomial parse_atom(Lexer& lex, const RingPtr& ring, const NamedPolynomials* named) {
  const Token& t = lex.peek();
  if (t.kind == Token::Kind::Number) {
    Token n = lex.next();
    return Polynomial::constant(ring, parse_number(n, ring->field()));
  }
  if (t.kind == Token::Kind::Identifier) {
    Token id = lex.next();
    if (auto idx = ring->find(id.text)) return Polynomial::variable(ring, *idx);
    if (named != nullptr) {
      auto it = named->find(id.text);
      if (it != named->end()) return it->second.in_ring(ring);
    }
    throw ParseError("unknown variable '" + id.text + "'", id.line, id.column);
  }
  if (lex.accept("(")) {
    Polynomial inner = parse_sum(lex, ring, named);
    lex.expect(")");
    return inner;
  }
  lex.fail("expected a variable, number or '('");
}

Polynomial parse_factor(Lexer& lex, const RingPtr& ring, const NamedPolynomials* named) {
  Polynomial base = parse_atom(lex, ring, named);
  if (lex.accept("^")) return base.pow(parse_exponent(lex.next()));
  return base;
}

Polynomial parse_term(Lexer& lex, const RingPtr& ring, const NamedPolynomials* named) {
  Polynomial acc = parse_factor(lex, ring, named);
  for (;;) {
    if (lex.accept("*")) {
      acc = acc * parse_factor(lex, ring, named);
    } else if (starts_factor(lex.peek()) && !lex.peek().line_start) {
      acc = acc * parse_factor(lex, ring, named);
    } else {
      return acc;
    }
  }
}

Polynomial parse_sum(Lexer& lex, const RingPtr& ring, const NamedPolynomials* named) {
  Polynomial acc(ring);
  bool negate = false;
  if (lex.accept("-")) {
    negate = true;
  } else {
    lex.accept("+");
  }
  for (;;) {
    Polynomial t = parse_term(lex, ring, named);
    acc = negate ? acc - t : acc + t;
    if (lex.accept("+")) {
      negate = false;
    } else if (lex.accept("-")) {
      negate = true;
    } else {
      return acc;
    }
  }
}

}  // namespace

Polynomial parse_polynomial_tokens(Lexer& lex, const RingPtr& ring, const NamedPolynomials* named) {
  return parse_sum(lex, ring, named);
}

}  // namespace detail

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, const NamedPolynomials* named) {
  detail::Lexer lex(text);
  Polynomial f = detail::parse_polynomial_tokens(lex, ring, named);
  if (lex.peek().kind != detail::Token::Kind::End) lex.fail("unexpected trailing input");
  return f;
}

}  // namespace fsplit
