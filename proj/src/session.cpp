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


#include "fsplit/session.hpp"

#include <set>

#include "fsplit/errors.hpp"
#include "lexer.hpp"
#include "poly_parser.hpp"

namespace fsplit {

const Ideal& Session::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error("unknown ideal '" + name + "'");
  return it->second;
}

Polynomial Session::polynomial(std::string_view text) const { return parse_polynomial(ring, text, &polynomials); }

namespace {

using detail::Lexer;
using detail::Token;

Token expect_identifier(Lexer& lex, const std::string& what) {
  if (lex.peek().kind != Token::Kind::Identifier) lex.fail("expected " + what);
  return lex.next();
}

void expect_keyword(Lexer& lex, const std::string& keyword) {
  if (lex.peek().kind != Token::Kind::Identifier || lex.peek().text != keyword) lex.fail("expected '" + keyword + "'");
  lex.next();
}

RingPtr parse_ring(Lexer& lex) {
  expect_keyword(lex, "ring");
  expect_keyword(lex, "p");
  lex.expect("=");
  Token p = lex.next();
  if (p.kind != Token::Kind::Number) throw ParseError("expected the characteristic", p.line, p.column);
  if (p.text.size() > 10) throw ParseError("characteristic too large", p.line, p.column);
  std::uint64_t value = std::stoull(p.text);
  if (!is_prime(value)) throw ParseError("modulus " + p.text + " is not prime", p.line, p.column);
  expect_keyword(lex, "vars");
  lex.expect("=");
  lex.expect("[");
  std::vector<std::string> vars;
  std::set<std::string> seen;
  do {
    Token v = expect_identifier(lex, "a variable name");
    if (!seen.insert(v.text).second) throw ParseError("repeated variable '" + v.text + "'", v.line, v.column);
    vars.push_back(v.text);
  } while (lex.accept(","));
  lex.expect("]");
  std::string order = "lex";
  if (lex.peek().kind == Token::Kind::Identifier && lex.peek().text == "order") {
    lex.next();
    lex.expect("=");
    Token o = expect_identifier(lex, "lex or grevlex");
    if (o.text != "lex" && o.text != "grevlex") throw ParseError("unknown order '" + o.text + "'", o.line, o.column);
    order = o.text;
  }
  try {
    return order == "lex" ? Ring::make_lex(static_cast<std::uint32_t>(value), vars)
                          : Ring::make_grevlex(static_cast<std::uint32_t>(value), vars);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), p.line, p.column);
  }
}

}  // namespace

Session parse_session(std::string_view text) {
  Lexer lex(text);
  Session session;
  session.ring = parse_ring(lex);
  std::set<std::string> names;
  while (lex.peek().kind != Token::Kind::End) {
    Token keyword = expect_identifier(lex, "'ideal' or 'poly'");
    if (keyword.text != "ideal" && keyword.text != "poly") {
      throw ParseError("expected 'ideal' or 'poly', found '" + keyword.text + "'", keyword.line, keyword.column);
    }
    Token name = expect_identifier(lex, "a name");
    if (session.ring->find(name.text)) {
      throw ParseError("name '" + name.text + "' is a ring variable", name.line, name.column);
    }
    if (!names.insert(name.text).second) throw ParseError("repeated name '" + name.text + "'", name.line, name.column);
    lex.expect("=");
    if (keyword.text == "poly") {
      session.polynomials.emplace(name.text,
                                  detail::parse_polynomial_tokens(lex, session.ring, &session.polynomials));
      continue;
    }
    lex.expect("[");
    std::vector<Polynomial> gens;
    if (!lex.accept("]")) {
      do {
        gens.push_back(detail::parse_polynomial_tokens(lex, session.ring, &session.polynomials));
      } while (lex.accept(","));
      lex.expect("]");
    }
    session.ideals.emplace(name.text, Ideal(session.ring, std::move(gens)));
    session.ideal_names.push_back(name.text);
  }
  return session;
}

}  // namespace fsplit
