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

#include <map>
#include <random>

#include "fsplit/constructions.hpp"
#include "fsplit/errors.hpp"
#include "fsplit/gvd.hpp"
#include "fsplit/parse.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fsplit;

namespace {

Ideal ideal_of(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(parse_polynomial(ring, t));
  return Ideal(ring, std::move(gens));
}

// The structural invariants every decomposition satisfies.
void check_invariants(const GvdDecomposition& d) {
  const RingPtr& ring = d.ring();
  Polynomial y = Polynomial::variable(ring, d.y);
  CHECK(equals(d.link, saturate(d.inY, y)));
  CHECK(contains(d.link, d.deletion));
  for (const auto& g : d.deletion.generators()) CHECK_FALSE(g.involves(d.y));
  CHECK(d.condition1 == equals(d.inY, intersect(d.link, sum(d.deletion, Ideal(ring, {y})))));
  if (d.condition1) CHECK(equals(d.inY, sum(product(Ideal(ring, {y}), d.link), d.deletion)));
  for (const auto& g : d.deletion.generators()) CHECK(contains(d.ideal, g));
}

}  // namespace

TEST_CASE("2-minors of a 2x3 matrix at the last variable") {
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = two_row_ring(p, 3);
    Ideal I = two_row_minors(ring, 3);
    auto d = decompose(I, "x23");
    CHECK(d.condition1);
    CHECK(equals(d.link, ideal_of(ring, {"x11", "x12"})));
    CHECK(equals(d.deletion, ideal_of(ring, {"x11*x22 - x12*x21"})));
    CHECK(d.degeneracy == Degeneracy::Nondegenerate);
    CHECK(d.condition2 == Condition2::Holds);
    CHECK(d.pairs.size() == 2);
    for (const auto& pr : d.pairs) {
      CHECK_FALSE(pr.q.involves(d.y));
      CHECK_FALSE(pr.r.involves(d.y));
    }
    check_invariants(d);
  }
}

TEST_CASE("principal determinant") {
  auto ring = Ring::make_lex(3, {"x11", "x12", "x21", "x22"});
  auto d = decompose(ideal_of(ring, {"x11*x22 - x12*x21"}), "x22");
  CHECK(equals(d.inY, ideal_of(ring, {"x11*x22"})));
  CHECK(equals(d.link, ideal_of(ring, {"x11"})));
  CHECK(d.deletion.is_zero());
  CHECK(d.condition1);
  check_invariants(d);
}

TEST_CASE("degenerate decompositions") {
  auto ring = Ring::make_lex(2, {"x", "y", "z"});
  auto unit = decompose(ideal_of(ring, {"y + x"}), "y");
  CHECK(unit.link.is_unit());
  CHECK(unit.degeneracy == Degeneracy::UnitLink);
  auto free = decompose(ideal_of(ring, {"x*z + x^2", "z^3"}), "y");
  CHECK(equals(free.link, free.deletion));
  CHECK(free.degeneracy == Degeneracy::EqualRadicals);
  CHECK(free.condition2 == Condition2::HoldsByDegenerateEquality);
  CHECK_THROWS_AS(decompose(Ideal::unit(ring), "y"), PreconditionError);
  CHECK_THROWS_AS(decompose(ideal_of(ring, {"y"}), "w"), UnknownVariable);
}

TEST_CASE("condition (1) fails for higher y-degree") {
  auto ring = Ring::make_lex(3, {"x", "y"});
  auto d = decompose(ideal_of(ring, {"y^2 - x"}), "y");
  CHECK_FALSE(d.condition1);
  CHECK(d.degeneracy == Degeneracy::NotAGvd);
  check_invariants(d);
}

TEST_CASE("condition (2)") {
  auto ring = Ring::make_lex(2, {"x", "y"});
  GvdDecomposition d;
  d.y = 1;
  d.ideal = Ideal::zero(ring);
  d.link = ideal_of(ring, {"x"});
  d.deletion = ideal_of(ring, {"y"});
  d.condition1 = true;
  CHECK(check_condition2(d) == Condition2::Holds);
  d.deletion = d.link;
  CHECK(check_condition2(d) == Condition2::HoldsByDegenerateEquality);

  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto e = decompose(non_f_split_ideal(p), "y");
    auto r = e.ring();
    CHECK(equals(e.link, ideal_of(r, {"x*z", "r"})));
    CHECK(equals(e.deletion, ideal_of(r, {"r*z"})));
    CHECK(e.condition1);
    CHECK(e.condition2 == Condition2::Holds);
    CHECK(e.degeneracy == Degeneracy::Nondegenerate);
  }
}

TEST_CASE("link and deletion match Stanley-Reisner combinatorics (property)") {
  std::mt19937_64 rng(71);
  auto ring = Ring::make_lex(2, {"a", "b", "c", "d", "e", "f"});
  for (int i = 0; i < 60; ++i) {
    Ideal I = gen::squarefree_monomial_ideal(rng, ring, 5);
    if (I.is_unit()) continue;
    std::size_t v = rng() % 6;
    auto d = decompose(I, v);
    auto complex = oracle::stanley_reisner_complex(I.generators(), 6);
    Ideal link(ring, oracle::minimal_nonfaces(oracle::link(complex, v), v, ring));
    Ideal deletion(ring, oracle::minimal_nonfaces(oracle::deletion(complex, v), v, ring));
    CHECK(equals(d.link, link));
    CHECK(equals(d.deletion, deletion));
    CHECK(d.condition1);
    check_invariants(d);
  }
}

TEST_CASE("decomposition invariants on random ideals (property)") {
  std::mt19937_64 rng(73);
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = Ring::make_lex(p, {"x", "y", "z"});
    for (int i = 0; i < 40; ++i) {
      Ideal I = gen::ideal(rng, ring, 3, 3, 2);
      if (I.is_unit()) continue;
      check_invariants(decompose(I, rng() % 3));
    }
  }
}

TEST_CASE("trees stop at variable-generated ideals") {
  auto ring = Ring::make_lex(2, {"x1", "x2"});
  auto single = lex_gvd_tree(ideal_of(ring, {"x1"}), {"x1", "x2"});
  CHECK(single.root->is_leaf());
  CHECK(single.root->stop_reason == "variables");
  CHECK(is_variable_generated(ideal_of(ring, {"x1", "x2"})));
  CHECK_FALSE(is_variable_generated(ideal_of(ring, {"x1*x2"})));
}

TEST_CASE("tree of the 2x3 minors") {
  auto ring = two_row_ring(2, 3);
  Ideal I = two_row_minors(ring, 3);
  auto tree = lex_gvd_tree(I, ring->variables());
  CHECK(tree.lex_compatible);
  for (const auto& node : tree.nodes()) {
    if (node->decomposition) {
      CHECK(node->decomposition->condition1);
    } else {
      CHECK((node->stop_reason == "variables" || node->stop_reason == "unit" || node->stop_reason == "zero"));
    }
  }
}

TEST_CASE("tree of the graph toric ideal") {
  Ideal P = graph_toric_ideal(example_graph(), 2);
  auto tree = lex_gvd_tree(P, {"e1", "e2", "e3"}, true);
  CHECK(tree.lex_compatible);
  CHECK(tree.leaves().size() == 8);
  std::map<std::string, std::vector<const char*>> expected{
      {"lk_e3 ∘ lk_e2 ∘ lk_e1", {"e5", "e7", "e11"}},    {"lk_e3 ∘ lk_e2 ∘ del_e1", {"e7", "e11"}},
      {"lk_e3 ∘ del_e2 ∘ lk_e1", {"e5*e8", "e11"}},      {"lk_e3 ∘ del_e2 ∘ del_e1", {"e11"}},
      {"del_e3 ∘ del_e2 ∘ del_e1", {}},                  {"del_e3 ∘ lk_e2 ∘ del_e1", {"e7*e9"}},
      {"del_e3 ∘ del_e2 ∘ lk_e1", {"e5*e8"}},            {"del_e3 ∘ lk_e2 ∘ lk_e1", {"e5", "e7*e9"}}};
  for (const auto& [label, gens] : expected) {
    auto node = tree.find(label);
    REQUIRE_MESSAGE(node != nullptr, label);
    std::vector<Polynomial> polys;
    for (const char* g : gens) polys.push_back(parse_polynomial(node->ideal.ring(), g));
    CHECK_MESSAGE(equals(node->ideal, Ideal(node->ideal.ring(), polys)), label);
    for (const char* used : {"e1", "e2", "e3"}) CHECK_FALSE(node->ideal.ring()->find(used).has_value());
  }
  auto sequential = lex_gvd_tree(P, {"e1", "e2", "e3"}, false);
  for (const auto& leaf : sequential.leaves()) CHECK(equals(leaf->ideal, tree.find(leaf->label)->ideal));
}
