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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fsplit/constructions.hpp"
#include "fsplit/errors.hpp"
#include "fsplit/parse.hpp"
#include "generators.hpp"

using namespace fsplit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "failed: " << what << "; ";
    }
  }
};

// Certificates from criteria 1 and 2, re-checked by criterion 8.
std::vector<LiftCertificate> g_certificates;

int g_failures = 0;

void criterion(int k, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++g_failures;
  std::printf("%s [%d] %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", k, name.c_str(), secs, o.detail.str().c_str());
  std::fflush(stdout);
}

Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(ring, text); }

Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  for (const auto& t : texts) gens.push_back(P(ring, t));
  return Ideal(ring, std::move(gens));
}

void two_row_family(Outcome& o) {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 2}, {2, 3}, {3, 3}, {3, 4}};
  for (std::uint32_t p : {2u, 3u}) {
    for (auto [n, big_n] : cases) {
      auto t0 = std::chrono::steady_clock::now();
      auto ring = two_row_ring(p, big_n);
      Ideal I = two_row_minors(ring, n);
      auto cand = two_row_splitting(ring, n);
      std::string tag = "(n=" + std::to_string(n) + ",N=" + std::to_string(big_n) + ",p=" + std::to_string(p) + ")";
      o.require(is_splitting(cand), "splitting " + tag);
      o.require(is_compatible_fedder(cand, I), "Fedder " + tag);
      auto pipeline = two_row_lift_pipeline(ring, n);
      o.require(pipeline.result == cand.polynomial(), "lift reproduces the formula " + tag);
      for (const auto& cert : pipeline.certificates) {
        o.require(cert.valid(), "certificate " + tag);
        g_certificates.push_back(cert);
      }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(secs < (n == 3 && big_n == 4 && p == 3 ? 120.0 : 10.0), "time budget " + tag);
    }
  }
  o.detail << "8 cases split, are compatible and are reproduced by the lift pipeline";
}

void graph_chain(Outcome& o) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> leaves{
      {"lk_e3 ∘ lk_e2 ∘ lk_e1", {"e5", "e7", "e11"}}, {"lk_e3 ∘ lk_e2 ∘ del_e1", {"e7", "e11"}},
      {"lk_e3 ∘ del_e2 ∘ lk_e1", {"e5*e8", "e11"}},   {"lk_e3 ∘ del_e2 ∘ del_e1", {"e11"}},
      {"del_e3 ∘ del_e2 ∘ del_e1", {}},               {"del_e3 ∘ lk_e2 ∘ del_e1", {"e7*e9"}},
      {"del_e3 ∘ del_e2 ∘ lk_e1", {"e5*e8"}},         {"del_e3 ∘ lk_e2 ∘ lk_e1", {"e5", "e7*e9"}}};
  for (std::uint32_t p : {2u, 3u}) {
    std::string tag = " (p=" + std::to_string(p) + ")";
    Ideal I = graph_toric_ideal(example_graph(), p);
    const RingPtr& ring = I.ring();
    std::vector<std::string> vars{"e1", "e2", "e3"};
    GvdTree tree = lex_gvd_tree(I, vars);
    o.require(tree.leaves().size() == 8, "eight leaves" + tag);
    for (const auto& [label, gens] : leaves) {
      auto node = tree.find(label);
      o.require(node != nullptr && equals(node->ideal, ideal_of(node->ideal.ring(), gens)), "leaf " + label + tag);
    }
    std::vector<Polynomial> schedule{P(ring, "e11"), P(ring, "e7*e9"), P(ring, "e5*e8")};
    LiftChain chain = lift_chain(tree, vars, schedule, standard_splitting(ring));
    auto expected = example_graph_splittings(ring);
    o.require(chain.levels.size() == expected.size(), "three levels" + tag);
    for (std::size_t k = 0; k < expected.size() && k < chain.levels.size(); ++k) {
      o.require(chain.levels[k].consistent && chain.levels[k].fNew == expected[k], "level " + std::to_string(k) + tag);
      for (const auto& cert : chain.levels[k].certificates) g_certificates.push_back(cert);
    }
    o.require(chain.valid(), "chain certificates" + tag);
    SplittingCandidate f(chain.result);
    o.require(is_splitting(f) && is_compatible_fedder(f, I), "f compatibly splits P(G)" + tag);
  }
  o.detail << "leaves match, f2, f1, f reproduced, f compatible at p = 2, 3";
}

void non_f_split(Outcome& o) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::string tag = " (p=" + std::to_string(p) + ")";
    Ideal I = non_f_split_ideal(p);
    const RingPtr& ring = I.ring();
    for (const char* text : {"z*(y*x - s^2)*r*s", "z*(y*x - s^2)*y*r*s"}) {
      SplittingCandidate cand(P(ring, text));
      bool splits = is_splitting(cand);
      bool fedder = is_compatible_fedder(cand, I);
      o.require(!(splits && fedder), std::string("candidate ") + text + " compatibly splits" + tag);
      if (p == 2) o.detail << text << ": splits=" << splits << " fedder=" << fedder << "; ";
    }
    auto d = decompose(I, "y");
    o.require(equals(d.link, ideal_of(ring, {"x*z", "r"})) && equals(d.deletion, ideal_of(ring, {"r*z"})),
              "link and deletion" + tag);
    SplittingCandidate standard(standard_splitting(ring));
    o.require(is_compatible_fedder(standard, d.link) && is_compatible_fedder(standard, d.deletion),
              "standard splitting on C and N" + tag);
    bool raised = false;
    try {
      lift_splitting(I, d, P(ring, "x*z*r*s"), P(ring, "z*x"));
    } catch (const PreconditionError& e) {
      raised = e.hypothesis() == "u nonzerodivisor modulo N";
    }
    o.require(raised, "NZD precondition error" + tag);
  }
  o.detail << "neither reading compatibly splits I (the second fails the splitting test, not Fedder)";
}

void double_determinantal(Outcome& o) {
  for (std::size_t r : {2u, 3u}) {
    std::string tag = " (n=2, r=" + std::to_string(r) + ")";
    auto inst = double_det_instance(2, 2, 2, r, 2, 2);
    auto f = double_det_splitting(inst);
    o.require(is_splitting(f), "splitting" + tag);
    o.require(is_compatible_fedder(f, inst.ideal()), "Fedder against I_n(H) + I_n(V)" + tag);
    o.require(double_det_factors(inst).size() == r + 2, "factor count" + tag);
    for (std::size_t i = 1; i + 2 <= r; ++i) {
      auto j = inst.j_generators(i);
      o.require(pairwise_coprime_leading_terms(j), "coprime leading terms of J_" + std::to_string(i) + tag);
      std::size_t codim = inst.ring->num_variables() - dimension(Ideal(inst.ring, j));
      o.require(codim == 2 * 2 + 1, "codim J_" + std::to_string(i) + tag);
      o.detail << "codim J_" << i << tag << " = " << codim << "; ";
    }
  }
  o.detail << "J_i is vacuous for r = 2";
}

void ladder(Outcome& o) {
  LadderExample ex = ladder_example(2);
  const RingPtr& ring = ex.ring;
  auto d = decompose(ex.ideal, "z12");
  Polynomial g;
  o.require(ex.f.divide_exact(Polynomial::variable(ring, "z12"), g), "z12 divides f");
  auto cert = split_sum_lift(ex.ideal, d, g, ex.delta, ex.decomposition);
  Polynomial printed = P(ring, "x12*(y21*z12 - y22*z11) - x22*(y11*z12 - y12*z11)");
  o.require(cert.v == printed, "Δ' equals the bordered determinant");
  SplittingCandidate cand(cert.fNew);
  o.require(is_splitting(cand), "candidate splits");
  o.require(is_compatible_fedder(cand, ex.ideal), "candidate compatible with the ladder ideal");
  o.require(cert.valid(), "certificate checks");
  o.detail << "Δ' = " << cert.v.to_string();
}

void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(2026);
  int disagreements = 0;
  int compatible = 0;
  const int cases = 200;
  for (int i = 0; i < cases; ++i) {
    std::uint32_t p = i % 2 == 0 ? 2 : 3;
    std::size_t nvars = 1 + rng() % 3;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(nvars);
    auto ring = Ring::make_grevlex(p, names);
    Ideal I = gen::ideal(rng, ring, 3, 3, 3);
    while (I.is_unit()) I = gen::ideal(rng, ring, 3, 3, 3);
    Polynomial f = gen::nonzero(rng, ring, 4, 4);
    // Bias half the candidates towards splittings so both verdicts occur.
    if (rng() % 2) f = standard_splitting(ring) * gen::nonzero(rng, ring, 1, 1);
    SplittingCandidate cand(f);
    bool fedder = is_compatible_fedder(cand, I);
    bool brute = is_compatible_bruteforce(cand, I);
    if (fedder != brute) ++disagreements;
    if (fedder) ++compatible;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail << cases << " proper ideals, " << compatible << " compatible, " << disagreements << " disagreements";
}

void groebner_properties(Outcome& o) {
  std::mt19937_64 rng(7);
  int failures = 0;
  const int cases = 500;
  for (int i = 0; i < cases; ++i) {
    std::uint32_t p = i % 2 == 0 ? 2 : 3;
    auto ring = Ring::make_grevlex(p, {"x", "y", "z"});
    Ideal a = gen::ideal(rng, ring, 3, 3, 2);
    auto gens = a.generators();
    bool ok = true;
    switch (i % 5) {
      case 0: {
        auto gb = buchberger(gens);
        ok = s_pairs_reduce_to_zero(gb) && is_reduced(gb);
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ok = ok && buchberger(shuffled).elements() == gb.elements();
        break;
      }
      case 1: {
        auto gb = a.groebner();
        Polynomial f = gen::polynomial(rng, ring, 5, 4);
        Polynomial nf = normal_form(f, *gb);
        ok = normal_form(nf, *gb) == nf && contains(a, f - nf);
        break;
      }
      case 2: {
        Polynomial f = gen::nonzero(rng, ring, 2, 2);
        Ideal q = quotient(a, f);
        Ideal s = saturate(a, f);
        ok = contains(q, a) && contains(s, q);
        for (const auto& g : q.generators()) ok = ok && contains(a, g * f);
        break;
      }
      case 3: {
        Ideal b = gen::ideal(rng, ring, 2, 3, 2);
        Ideal c = intersect(a, b);
        ok = contains(a, c) && contains(b, c) && contains(c, product(a, b));
        break;
      }
      case 4: {
        Ideal fp = frobenius_power(a);
        ok = contains(a, fp);
        for (const auto& g : gens) ok = ok && contains(fp, g.pow(p));
        break;
      }
    }
    if (!ok) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " property failures");
  o.detail << cases << " cases, " << failures << " failures";
}

void descent_round_trip(Outcome& o) {
  int failures = 0;
  for (const auto& cert : g_certificates) {
    DescentReport report = verify_knutson_descent(SplittingCandidate(cert.fNew), cert.ideal, cert.d.y);
    if (!report.all_passed()) ++failures;
  }
  o.require(!g_certificates.empty(), "certificates from criteria 1 and 2");
  o.require(failures == 0, std::to_string(failures) + " descent failures");
  o.detail << g_certificates.size() << " certificates, " << failures << " failures";
}

}  // namespace

int main() {
  criterion(1, "two-row maximal minors: splitting, compatibility, lift pipeline", two_row_family);
  criterion(2, "graph toric ideal: tree leaves, lift chain, compatibility", graph_chain);
  criterion(3, "non-F-split ideal: negative result", non_f_split);
  criterion(4, "double determinantal splitting for n = 2", double_determinantal);
  criterion(5, "ladder ideal: heuristic sum lift", ladder);
  criterion(6, "Fedder criterion vs brute force", oracle_equivalence);
  criterion(7, "Groebner and ideal operation properties", groebner_properties);
  criterion(8, "descent re-verifies every lift certificate", descent_round_trip);
  return g_failures == 0 ? 0 : 1;
}
