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

#include <algorithm>
#include <random>

#include "fsplit/errors.hpp"
#include "fsplit/groebner.hpp"
#include "fsplit/ideal.hpp"
#include "fsplit/parse.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fsplit;

namespace {

std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

}  // namespace

TEST_CASE("basis of a small ideal") {
  auto ring = Ring::make_lex(7, {"x", "y"});
  auto gens = polys(ring, {"x^2 - y", "x*y - 1"});
  auto gb = buchberger(gens);
  // lex x > y: the basis is {y^3 - 1, x - y^2}.
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == parse_polynomial(ring, "y^3 - 1"));
  CHECK(gb.elements()[1] == parse_polynomial(ring, "x - y^2"));
  CHECK(is_reduced(gb));
  CHECK(s_pairs_reduce_to_zero(gb));
}

TEST_CASE("unit and zero ideals") {
  auto ring = Ring::make_grevlex(3, {"x", "y"});
  CHECK(buchberger(polys(ring, {"x", "x + 1"})).is_unit());
  CHECK(buchberger(std::vector<Polynomial>{Polynomial(ring)}).is_zero_ideal());
  CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{}), Error);
}

TEST_CASE("pair budget is enforced") {
  auto ring = Ring::make_grevlex(32003, {"a", "b", "c", "d"});
  auto gens = polys(ring, {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"});
  BuchbergerOptions opts;
  opts.pair_budget = 1;
  CHECK_THROWS_AS(buchberger(gens, opts), BudgetExceeded);
  CHECK_NOTHROW(buchberger(gens));
}

TEST_CASE("reduced bases are correct and canonical (property)") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = Ring::make_grevlex(p, {"x", "y", "z"});
    auto lex = ring->with_order(TermOrder::lex({0, 1, 2}));
    for (int i = 0; i < 60; ++i) {
      auto gens = gen::ideal(rng, ring, 3, 3, 3).generators();
      BuchbergerOptions opts;
      opts.track_cofactors = true;
      auto gb = buchberger(gens, opts);
      CHECK(is_reduced(gb));
      CHECK(s_pairs_reduce_to_zero(gb));
      for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
      for (std::size_t k = 0; k < gb.elements().size(); ++k) {
        Polynomial combo(ring);
        for (std::size_t j = 0; j < gens.size(); ++j) combo += gb.cofactors()[k][j] * gb.generators()[j];
        CHECK(combo == gb.elements()[k]);
      }
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(gens[0] * gen::polynomial(rng, ring, 2, 2));
      CHECK(buchberger(shuffled).elements() == gb.elements());
      auto lex_gb = buchberger(to_ring(gens, lex));
      CHECK(s_pairs_reduce_to_zero(lex_gb));
      for (const auto& g : gb.elements()) CHECK(normal_form(g.in_ring(lex), lex_gb).is_zero());
    }
  }
}

TEST_CASE("normal form: idempotent, linear, membership by cofactors (property)") {
  std::mt19937_64 rng(23);
  auto ring = Ring::make_grevlex(3, {"x", "y", "z"});
  for (int i = 0; i < 80; ++i) {
    auto gens = gen::ideal(rng, ring, 3, 3, 3).generators();
    BuchbergerOptions opts;
    opts.track_cofactors = true;
    auto gb = buchberger(gens, opts);
    Polynomial f = gen::polynomial(rng, ring, 5, 4), g = gen::polynomial(rng, ring, 5, 4);
    Polynomial nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(f + g, gb) == nf + normal_form(g, gb));
    CHECK(normal_form(f - nf, gb).is_zero());
    Polynomial member(ring);
    for (const auto& h : gens) member += h * gen::polynomial(rng, ring, 3, 2);
    auto coeffs = express_in_ideal(member, gb);
    REQUIRE(coeffs.has_value());
    Polynomial back(ring);
    for (std::size_t j = 0; j < gens.size(); ++j) back += (*coeffs)[j] * gb.generators()[j];
    CHECK(back == member);
    if (!nf.is_zero()) CHECK_FALSE(express_in_ideal(nf, gb).has_value());
  }
}

TEST_CASE("membership agrees with homogeneous linear algebra (property)") {
  std::mt19937_64 rng(29);
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = Ring::make_grevlex(p, {"x", "y", "z"});
    for (int i = 0; i < 60; ++i) {
      Ideal I = gen::homogeneous_ideal(rng, ring, 3, 3, 2);
      std::uint32_t d = 2 + static_cast<std::uint32_t>(rng() % 2);
      Polynomial f = gen::homogeneous(rng, ring, 3, d);
      if (rng() % 2) {
        f = Polynomial(ring);
        for (const auto& g : I.generators()) {
          if (g.total_degree() <= d) f += g * gen::homogeneous(rng, ring, 2, d - static_cast<std::uint32_t>(g.total_degree()));
        }
      }
      CHECK(contains(I, f) == oracle::homogeneous_member(I.generators(), f));
    }
  }
}

TEST_CASE("reduce records quotients") {
  auto ring = Ring::make_grevlex(5, {"x", "y"});
  auto divs = polys(ring, {"x*y - 1", "y^2 - x"});
  Polynomial f = parse_polynomial(ring, "x^2*y^3 + 2*x*y + y");
  std::vector<Polynomial> q;
  Polynomial r = reduce(f, divs, &q);
  CHECK(q.size() == 2);
  CHECK(q[0] * divs[0] + q[1] * divs[1] + r == f);
}

TEST_CASE("elimination") {
  auto ring = Ring::make_grevlex(7, {"t", "x", "y"});
  // Twisted parametrization x = t^2, y = t^3 eliminates to y^2 - x^3.
  auto gens = polys(ring, {"x - t^2", "y - t^3"});
  for (bool lex : {false, true}) {
    auto out = eliminate(gens, {"x", "y"}, lex);
    REQUIRE(out.size() == 1);
    CHECK(out[0].monic() == parse_polynomial(ring, "y^2 - x^3").monic());
  }
  CHECK_THROWS(eliminate(gens, {"w"}));
}
