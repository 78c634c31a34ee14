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

#include "fsplit/frobenius.hpp"

#include <random>

#include "fsplit/errors.hpp"

namespace fsplit {

Polynomial trace(const Polynomial& g) {
  const RingPtr& ring = g.ring();
  const std::uint32_t p = ring->characteristic();
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    std::vector<Exponent> exps(t.mono.size());
    bool pth_power = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      std::uint64_t e = std::uint64_t{t.mono[i]} + 1;
      if (e % p != 0) {
        pth_power = false;
        break;
      }
      exps[i] = static_cast<Exponent>(e / p - 1);
    }
    if (pth_power) out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

SplittingCandidate::SplittingCandidate(Polynomial f) : f_(std::move(f)) {
  if (!f_.ring()) throw Error("splitting candidate without a ring");
}

const Polynomial& SplittingCandidate::power() const {
  std::call_once(cache_->once, [this] { cache_->value = f_.pow(f_.ring()->characteristic() - 1); });
  return cache_->value;
}

Polynomial apply_splitting(const SplittingCandidate& cand, const Polynomial& g) {
  return trace(cand.power() * g.in_ring(cand.ring()));
}

SplittingStatus check_splitting(const SplittingCandidate& cand) {
  SplittingStatus status;
  status.trace_value = trace(cand.power());
  if (status.trace_value.is_constant() && !status.trace_value.is_zero()) {
    Coeff c = status.trace_value.leading_coeff();
    status.verified = c == 1;
    if (c != 1) status.scale = cand.ring()->field().inv(c);
  }
  return status;
}

bool is_splitting(const SplittingCandidate& cand) { return check_splitting(cand).verified; }

bool leading_term_precheck(const SplittingCandidate& cand, const TermOrder& order) {
  const Polynomial& f = cand.polynomial();
  if (f.is_zero()) return false;
  auto [mono, coeff] = leading_term(f, order);
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] != 1) return false;
  }
  return true;
}

CompatibilityResult fedder_check(const SplittingCandidate& cand, const Ideal& ideal) {
  CompatibilityResult result;
  result.method = "fedder";
  Ideal in_ring = ideal.in_ring(cand.ring());
  if (in_ring.is_zero()) {
    result.verified = true;
    return result;
  }
  Ideal bracket = frobenius_power(in_ring);
  auto gb = bracket.groebner();
  const Polynomial& fp = cand.power();
  for (std::size_t i = 0; i < in_ring.generators().size(); ++i) {
    const Polynomial& g = in_ring.generators()[i];
    if (!normal_form(fp * g, *gb).is_zero()) {
      result.witnesses.push_back("generator " + std::to_string(i) + ": " + g.to_string());
    }
  }
  result.verified = result.witnesses.empty();
  return result;
}

bool is_compatible_fedder(const SplittingCandidate& cand, const Ideal& ideal) {
  return fedder_check(cand, ideal).verified;
}

CompatibilityResult bruteforce_check(const SplittingCandidate& cand, const Ideal& ideal,
                                     const BruteforceLimits& limits) {
  const RingPtr& ring = cand.ring();
  const std::size_t n = ring->num_variables();
  const std::uint32_t p = ring->characteristic();
  if (n > limits.max_variables || p > limits.max_characteristic) {
    throw InstanceTooLarge("brute-force compatibility limited to " + std::to_string(limits.max_variables) +
                           " variables and p <= " + std::to_string(limits.max_characteristic));
  }
  CompatibilityResult result;
  result.method = "bruteforce";
  Ideal in_ring = ideal.in_ring(ring);
  auto gb = in_ring.groebner();
  for (std::size_t gi = 0; gi < in_ring.generators().size(); ++gi) {
    Polynomial base = cand.power() * in_ring.generators()[gi];
    std::vector<Exponent> exps(n, 0);
    for (;;) {
      Monomial m(exps);
      Polynomial image = trace(base.mul_term(m, 1));
      if (!normal_form(image, *gb).is_zero()) {
        Polynomial mp = Polynomial::term(ring, m, 1);
        result.witnesses.push_back("generator " + std::to_string(gi) + " times " + mp.to_string());
      }
      std::size_t k = 0;
      while (k < n && ++exps[k] == p) exps[k++] = 0;
      if (k == n) break;
    }
  }
  result.verified = result.witnesses.empty();
  return result;
}

bool is_compatible_bruteforce(const SplittingCandidate& cand, const Ideal& ideal, const BruteforceLimits& limits) {
  return bruteforce_check(cand, ideal, limits).verified;
}

namespace {

Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, std::size_t max_terms, Exponent max_exp) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<Exponent> exp(0, max_exp);
  std::uniform_int_distribution<Coeff> coeff(1, ring->characteristic() - 1);
  std::vector<Term> terms;
  std::size_t k = nterms(rng);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Exponent> e(ring->num_variables());
    for (auto& x : e) x = exp(rng);
    terms.push_back({Monomial(std::move(e)), coeff(rng)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

bool radical_spot(const Ideal& ideal, std::mt19937_64& rng, std::vector<std::string>& notes) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> probes;
  for (std::size_t v = 0; v < ring->num_variables(); ++v) probes.push_back(Polynomial::variable(ring, v));
  for (int k = 0; k < 16; ++k) probes.push_back(random_polynomial(ring, rng, 3, 1));
  for (const auto& g : ideal.generators()) {
    // Squarefree part of a monomial generator is a natural probe.
    if (g.is_monomial()) {
      std::vector<Exponent> e(g.leading_monomial().size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.leading_monomial()[i] ? 1 : 0;
      probes.push_back(Polynomial::term(ring, Monomial(std::move(e)), 1));
    }
  }
  const std::uint32_t p = ring->characteristic();
  for (const auto& h : probes) {
    if (contains(ideal, h.pow(p)) && !contains(ideal, h)) {
      notes.push_back("h^p in I but h not in I for h = " + h.to_string());
      return false;
    }
  }
  return true;
}

}  // namespace

ClosureReport check_closure_laws(const SplittingCandidate& cand, const Ideal& i, const Ideal& j, std::uint64_t seed) {
  ClosureReport report;
  report.splits = is_splitting(cand);
  if (!report.splits) report.notes.push_back("candidate is not a splitting");
  report.precondition_i = is_compatible_fedder(cand, i);
  report.precondition_j = is_compatible_fedder(cand, j);
  if (!report.precondition_i) report.notes.push_back("precondition failed: I is not compatibly split");
  if (!report.precondition_j) report.notes.push_back("precondition failed: J is not compatibly split");
  report.sum = is_compatible_fedder(cand, sum(i, j));
  report.intersection = is_compatible_fedder(cand, intersect(i, j));
  report.quotient = is_compatible_fedder(cand, quotient(i, j));
  report.image_in_ideal = true;
  for (const Ideal* ideal : {&i, &j}) {
    for (const auto& g : ideal->generators()) {
      if (!contains(*ideal, apply_splitting(cand, g))) report.image_in_ideal = false;
    }
  }
  std::mt19937_64 rng(seed);
  report.radical_spot_check = true;
  for (const Ideal* ideal : {&i, &j}) {
    if (!ideal->is_unit() && !radical_spot(*ideal, rng, report.notes)) report.radical_spot_check = false;
  }
  return report;
}

DescentReport verify_knutson_descent(const SplittingCandidate& cand, const Ideal& ideal, std::size_t y) {
  DescentReport report;
  const RingPtr& ring = cand.ring();
  std::vector<std::size_t> priority{y};
  for (std::size_t v : ring->order().priority()) {
    if (v != y) priority.push_back(v);
  }
  report.lex_leading_term_ok = leading_term_precheck(cand, TermOrder::lex(priority));
  if (!report.lex_leading_term_ok) report.notes.push_back("lex leading term is not the product of all variables");
  report.splits = is_splitting(cand);
  if (!report.splits) report.notes.push_back("candidate is not a splitting");
  Ideal in_ring = ideal.in_ring(ring);
  report.compatible_with_ideal = is_compatible_fedder(cand, in_ring);
  if (!report.compatible_with_ideal) report.notes.push_back("candidate does not compatibly split I");
  report.initial_form = cand.polynomial().initial_form(y);
  SplittingCandidate descended(report.initial_form);
  Ideal in_y = initial_ideal(in_ring, y);
  Polynomial yv = Polynomial::variable(ring, y);
  report.initial_ideal = is_compatible_fedder(descended, in_y);
  report.colon = is_compatible_fedder(descended, quotient(in_y, yv));
  report.plus_variable = is_compatible_fedder(descended, sum(in_y, Ideal(ring, {yv})));
  return report;
}

}  // namespace fsplit
