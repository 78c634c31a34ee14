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


#include <doctest.h>

#include <random>

#include "fsplit/errors.hpp"
#include "fsplit/parse.hpp"
#include "fsplit/polynomial.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fsplit;

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::trial_division_prime(n));
  CHECK(is_prime(2147483647ULL));
  CHECK_FALSE(is_prime(2147483647ULL * 3));
}

TEST_CASE("prime field arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    PrimeField f(p);
    for (Coeff a = 0; a < p; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, p) == a);
      CHECK(f.sub(f.add(a, 3 % p), 3 % p) == a);
    }
    CHECK_THROWS_AS(f.inv(0), Error);
    CHECK(f.from_int(-1) == p - 1);
  }
  PrimeField big(2147483647u);
  CHECK(big.mul(2147483646u, 2147483646u) == 1);
  CHECK(PrimeField(7).to_signed(6) == -1);
}

TEST_CASE("monomial operations") {
  Monomial a({2, 0, 1});
  Monomial b({1, 1, 0});
  CHECK((a * b) == Monomial({3, 1, 1}));
  CHECK(a.lcm(b) == Monomial({2, 1, 1}));
  CHECK(a.gcd(b) == Monomial({1, 0, 0}));
  CHECK(Monomial({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK((a / Monomial({1, 0, 1})) == Monomial({1, 0, 0}));
  CHECK(Monomial({0, 1, 0}).coprime(Monomial({1, 0, 3})));
  CHECK(a.degree() == 3);
  Monomial huge(std::vector<Exponent>{0xFFFFFFFFu});
  CHECK_THROWS_AS(huge * Monomial(std::vector<Exponent>{1}), ExponentOverflow);
}

TEST_CASE("term orders: lex, grevlex and weight refinement") {
  auto lex = TermOrder::lex({0, 1, 2});
  auto grevlex = TermOrder::grevlex({0, 1, 2});
  Monomial x2({2, 0, 0}), xy({1, 1, 0}), yz2({0, 1, 2}), z3({0, 0, 3});
  CHECK(lex.greater(x2, xy));
  CHECK(lex.greater(xy, yz2));
  CHECK(grevlex.greater(yz2, xy));
  // Grevlex on equal degree: x*z^2 < y^3 since z is the smallest variable.
  CHECK(grevlex.greater(Monomial({0, 3, 0}), Monomial({1, 0, 2})));
  auto z_first = lex.with_variable_first(2);
  CHECK(z_first.greater(z3, x2));
  CHECK(z_first.greater(Monomial({1, 0, 1}), Monomial({2, 1, 0})));
  CHECK_THROWS(TermOrder::lex({0, 0, 1}));
}

TEST_CASE("term orders are multiplicative total orders (property)") {
  std::mt19937_64 rng(11);
  std::vector<TermOrder> orders{TermOrder::lex({2, 0, 1, 3}), TermOrder::grevlex({0, 1, 2, 3}),
                                TermOrder::weight_then_grevlex({1, 1, 0, 0}, {3, 2, 1, 0}),
                                TermOrder::lex({0, 1, 2, 3}).with_variable_first(3)};
  for (const auto& order : orders) {
    for (int i = 0; i < 300; ++i) {
      Monomial a = gen::monomial(rng, 4, 5), b = gen::monomial(rng, 4, 5), c = gen::monomial(rng, 4, 5);
      int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(a * c, b * c) == ab);
      if (!c.is_one()) CHECK(order.greater(a * c, a));
    }
  }
}

TEST_CASE("rings validate and derive") {
  CHECK_THROWS_AS(Ring::make_lex(4, {"x"}), Error);
  CHECK_THROWS_AS(Ring::make_lex(2, {"x", "x"}), Error);
  auto r = Ring::make_lex(3, {"a", "b", "c"});
  CHECK(r->index_of("c") == 2);
  CHECK_THROWS_AS(r->index_of("d"), UnknownVariable);
  auto smaller = r->without({"b"});
  CHECK(smaller->variables() == std::vector<std::string>{"a", "c"});
  auto bigger = r->with_eliminable({"t"});
  CHECK(bigger->num_variables() == 4);
  CHECK(bigger->fresh_name("t") != "t");
}

TEST_CASE("polynomial arithmetic matches evaluation (property)") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto ring = Ring::make_grevlex(p, {"x", "y", "z"});
    for (int i = 0; i < 200; ++i) {
      Polynomial f = gen::polynomial(rng, ring, 5, 4), g = gen::polynomial(rng, ring, 5, 4);
      auto pt = oracle::random_point(rng, 3, p);
      auto ev = [&](const Polynomial& h) { return oracle::evaluate(h, pt); };
      CHECK(ev(f + g) == (ev(f) + ev(g)) % p);
      CHECK(ev(f - g) == (ev(f) + p - ev(g)) % p);
      CHECK(ev(f * g) == ev(f) * ev(g) % p);
      CHECK(ev(f.pow(3)) == oracle::powmod(ev(f), 3, p));
      CHECK(f.frobenius() == f.pow(p));
      Polynomial q;
      if (!g.is_zero()) {
        CHECK((f * g).divide_exact(g, q));
        CHECK(q == f);
      }
    }
  }
}

TEST_CASE("polynomial structure") {
  auto ring = Ring::make_lex(5, {"x", "y", "z"});
  Polynomial f = parse_polynomial(ring, "3*x^2*y + x*z - 2*y*z^3 + 4");
  CHECK(f.size() == 4);
  CHECK(f.leading_monomial() == Monomial({2, 1, 0}));
  CHECK(f.total_degree() == 4);
  CHECK(f.degree_in(2) == 3);
  CHECK(f.initial_form(2) == parse_polynomial(ring, "-2*y*z^3"));
  CHECK(f.coefficient_in(0, 1) == parse_polynomial(ring, "z"));
  CHECK(f.monic().leading_coeff() == 1);
  CHECK_THROWS(Polynomial(ring).leading_term());
  auto other = Ring::make_lex(5, {"x", "y"});
  CHECK_THROWS_AS(f + Polynomial::variable(other, 0), RingMismatch);
  Polynomial q;
  CHECK_FALSE(f.divide_exact(parse_polynomial(ring, "x"), q));
}

TEST_CASE("parser accepts the documented syntax and round-trips printing") {
  auto ring = Ring::make_lex(7, {"x11", "x12", "y"});
  CHECK(parse_polynomial(ring, "x11 x12 - 2 y") == parse_polynomial(ring, "x11*x12 - 2*y"));
  CHECK(parse_polynomial(ring, "(x11 + y)^2") == parse_polynomial(ring, "x11^2 + 2*x11*y + y^2"));
  CHECK(parse_polynomial(ring, "-y + 8") == parse_polynomial(ring, "1 - y"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = gen::polynomial(rng, ring, 6, 5);
    CHECK(parse_polynomial(ring, f.to_string()) == f);
  }
}

TEST_CASE("parser reports locations") {
  auto ring = Ring::make_lex(2, {"x", "y"});
  try {
    parse_polynomial(ring, "x + w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial(ring, "x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ring, "(x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ring, "x^y"), ParseError);
}
