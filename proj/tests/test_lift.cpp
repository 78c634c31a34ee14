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

#include "fsplit/constructions.hpp"
#include "fsplit/errors.hpp"
#include "fsplit/lift.hpp"
#include "fsplit/parse.hpp"
#include "generators.hpp"

using namespace fsplit;

namespace {

Ideal ideal_of(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> gens;
  for (const char* t : texts) gens.push_back(parse_polynomial(ring, t));
  return Ideal(ring, std::move(gens));
}

Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(ring, text); }

}  // namespace

TEST_CASE("q and r for the 2x3 minors") {
  auto ring = two_row_ring(3, 3);
  auto d = decompose(two_row_minors(ring, 3), "x23");
  GvdPair qr = find_q_r(d);
  CHECK(is_nonzerodivisor(d.deletion, qr.q));
  Polynomial y = Polynomial::variable(ring, "x23");
  CHECK(is_nonzerodivisor(d.deletion, y * qr.q + qr.r));
  CHECK(contains(d.ideal, y * qr.q + qr.r));
  CHECK(((qr.q == P(ring, "x12") && qr.r == P(ring, "-x13*x22")) ||
         (qr.q == P(ring, "x11") && qr.r == P(ring, "-x13*x21"))));
}

TEST_CASE("q and r over a zero deletion") {
  auto ring = Ring::make_lex(2, {"x11", "x12", "x21", "x22"});
  auto d = decompose(ideal_of(ring, {"x11*x22 - x12*x21"}), "x22");
  GvdPair qr = find_q_r(d);
  CHECK(qr.q == P(ring, "x11"));
  CHECK(qr.r == P(ring, "x12*x21"));
}

TEST_CASE("nonzerodivisor test") {
  auto ring = Ring::make_lex(2, {"x", "y", "z"});
  Ideal n = ideal_of(ring, {"x*y"});
  CHECK(is_nonzerodivisor(n, P(ring, "z")));
  CHECK(is_nonzerodivisor(n, P(ring, "x + y")));
  CHECK_FALSE(is_nonzerodivisor(n, P(ring, "x*z")));
  CHECK(is_nonzerodivisor(Ideal::zero(ring), P(ring, "x")));
}

TEST_CASE("psi image and linearized representative") {
  auto ring = two_row_ring(3, 3);
  auto d = decompose(two_row_minors(ring, 3), "x23");
  GvdPair qr{P(ring, "x12"), P(ring, "-x13*x22")};
  Polynomial y = Polynomial::variable(ring, "x23");
  CHECK(contains(d.deletion, psi_image(d, qr, qr.q) - (y * qr.q + qr.r)));
  Polynomial g = psi_image(d, qr, P(ring, "x12"));
  CHECK(contains(d.deletion, g - P(ring, "x12*x23 - x13*x22")));
  CHECK(linearize_representative(d, P(ring, "x12"), g) == P(ring, "x12*x23 - x13*x22"));
  CHECK(linearize_representative(d, qr.q, y * qr.q + qr.r) == y * qr.q + qr.r);
  CHECK_THROWS_AS(psi_image(d, qr, P(ring, "x21")), PreconditionError);
}

TEST_CASE("psi is well defined modulo the deletion (property)") {
  std::mt19937_64 rng(83);
  auto ring = two_row_ring(3, 4);
  auto d = decompose(two_row_minors(ring, 4), "x24");
  GvdPair qr = find_q_r(d);
  for (int i = 0; i < 15; ++i) {
    Polynomial c(ring);
    for (const auto& g : d.link.generators()) c += g * gen::polynomial(rng, ring, 2, 1);
    Polynomial n(ring);
    for (const auto& g : d.deletion.generators()) n += g * gen::polynomial(rng, ring, 2, 1);
    if (c.is_zero()) continue;
    Polynomial a = psi_image(d, qr, c);
    Polynomial b = psi_image(d, qr, c + n);
    CHECK(contains(d.deletion, a - b));
    CHECK(contains(d.ideal, a));
    Polynomial y = Polynomial::variable(ring, "x24");
    CHECK(contains(d.deletion, c * (y * qr.q + qr.r) - a * qr.q));
  }
}

TEST_CASE("lifting one column of the two-row family") {
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = two_row_ring(p, 3);
    Ideal I = two_row_minors(ring, 3);
    auto d = decompose(I, "x23");
    Polynomial g = P(ring, "x21*(x11*x22 - x12*x21)*x12*x13");
    auto cert = lift_splitting(I, d, g, P(ring, "x12"));
    CHECK(cert.valid());
    CHECK(cert.fNew == two_row_splitting_polynomial(ring, 3));
    CHECK(cert.v == P(ring, "x12*x23 - x13*x22"));
    CHECK(validate_certificate(cert).all_passed());
    CHECK(cert.assertions.empty());
    if (p == 2) CHECK(is_compatible_bruteforce(SplittingCandidate(cert.fNew), I));
    CHECK_THROWS_AS(lift_splitting(I, d, g, P(ring, "x11")), PreconditionError);
    CHECK_THROWS_AS(lift_splitting(I, d, g * Polynomial::variable(ring, "x23"), P(ring, "x12")), PreconditionError);
  }
}

TEST_CASE("tampered certificates fail validation") {
  auto ring = two_row_ring(2, 3);
  Ideal I = two_row_minors(ring, 3);
  auto d = decompose(I, "x23");
  auto cert = lift_splitting(I, d, P(ring, "x21*(x11*x22 - x12*x21)*x12*x13"), P(ring, "x12"));
  auto bad = cert;
  bad.fNew = bad.fNew + P(ring, "x11*x12*x13*x21*x22*x23");
  auto checks = validate_certificate(bad);
  CHECK_FALSE(checks.all_passed());
  bad = cert;
  bad.v = P(ring, "x12*x23");
  CHECK_FALSE(validate_certificate(bad).v_in_ideal);
}

TEST_CASE("a zerodivisor u is rejected") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ideal I = non_f_split_ideal(p);
    const RingPtr& ring = I.ring();
    auto d = decompose(I, "y");
    Polynomial g = P(ring, "x*z*r*s");
    try {
      lift_splitting(I, d, g, P(ring, "z*x"));
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(e.hypothesis() == "u nonzerodivisor modulo N");
    }
  }
}

TEST_CASE("i*u = v*c + m") {
  std::mt19937_64 rng(89);
  auto ring = two_row_ring(3, 3);
  Ideal I = two_row_minors(ring, 3);
  auto d = decompose(I, "x23");
  GvdPair qr{P(ring, "x12"), P(ring, "-x13*x22")};
  Polynomial u = P(ring, "x12");
  Polynomial v = P(ring, "x12*x23 - x13*x22");
  auto same = decompose_iu(d, qr, u, v, v);
  CHECK(v * u == v * same.c + same.m);
  for (int i = 0; i < 10; ++i) {
    Polynomial member(ring);
    for (const auto& g : I.generators()) member += g * gen::homogeneous(rng, ring, 2, 1).scale(rng() % 3);
    auto parts = decompose_iu(d, qr, u, v, member);
    CHECK(member * u == v * parts.c + parts.m);
    CHECK(contains(d.link, parts.c));
    CHECK(contains(d.deletion, parts.m));
  }
  Polynomial n = P(ring, "x11*x22 - x12*x21");
  auto in_n = decompose_iu(d, qr, u, v, n);
  CHECK(n * u == v * in_n.c + in_n.m);
}

TEST_CASE("degenerate lifts") {
  auto ring = Ring::make_lex(2, {"y", "x1", "x2", "x3"});
  Ideal I = ideal_of(ring, {"x1*x2", "y + x3"});
  auto d = decompose(I, "y");
  REQUIRE(d.degeneracy == Degeneracy::UnitLink);
  auto lift = degenerate_lift(I, d, P(ring, "x1*x2*x3"));
  CHECK(lift.candidate == P(ring, "(y + x3)*x1*x2*x3"));
  CHECK(lift.splits);
  CHECK(lift.compatible);
  CHECK(is_compatible_bruteforce(SplittingCandidate(lift.candidate), I));

  Ideal free = ideal_of(ring, {"x1*x2"});
  auto e = decompose(free, "y");
  REQUIRE(e.degeneracy == Degeneracy::EqualRadicals);
  auto same = degenerate_lift(free, e, P(ring, "x1*x2*x3"));
  CHECK(same.candidate == P(ring, "y*x1*x2*x3"));
  CHECK(same.compatible);

  auto nondeg = decompose(ideal_of(ring, {"y*x1 - x2*x3"}), "y");
  CHECK_THROWS_AS(degenerate_lift(I, nondeg, P(ring, "x1*x2*x3")), PreconditionError);
}

TEST_CASE("lift chain up the graph tree") {
  Ideal I = graph_toric_ideal(example_graph(), 2);
  const RingPtr& ring = I.ring();
  std::vector<std::string> vars{"e1", "e2", "e3"};
  auto tree = lex_gvd_tree(I, vars);
  std::vector<Polynomial> schedule{P(ring, "e11"), P(ring, "e7*e9"), P(ring, "e5*e8")};
  auto chain = lift_chain(tree, vars, schedule, standard_splitting(ring));
  CHECK(chain.valid());
  auto expected = example_graph_splittings(ring);
  REQUIRE(chain.levels.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(chain.levels[k].consistent);
    CHECK(chain.levels[k].fNew == expected[k]);
  }
  CHECK(chain.result == P(ring, "(e3*e11 - e4*e9)*(e2*e7*e9 - e6*e8*e11)*(e1*e5*e8 - e7*e9*e10)*e4*e6*e10"));
  // Representatives from the graph's lift steps.
  auto del1 = tree.find("del_e1");
  REQUIRE(del1 != nullptr);
  const auto& d2 = *del1->decomposition;
  const RingPtr& r2 = d2.ring();
  Polynomial rep = psi_image(d2, find_q_r(d2), P(r2, "e7*e9"));
  CHECK(contains(d2.deletion, rep - P(r2, "e2*e7*e9 - e6*e8*e11")));
  auto root = decompose(I, "e1");
  Polynomial u = P(ring, "e5*e8");
  Polynomial v = linearize_representative(root, u, psi_image(root, find_q_r(root), u));
  CHECK(v == P(ring, "e1*e5*e8 - e7*e9*e10"));
}
