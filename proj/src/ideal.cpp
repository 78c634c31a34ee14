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

#include "fsplit/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

void check_same(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_variables(*b.ring())) throw RingMismatch("ideals belong to different rings");
}

using Bits = std::vector<std::uint64_t>;

Bits support_bits(const Monomial& m) {
  Bits b((m.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) b[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return b;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

struct IndependentSearch {
  std::size_t nvars;
  std::vector<Bits> supports;
  std::size_t best = 0;

  bool admissible(const Bits& set) const {
    return std::none_of(supports.begin(), supports.end(), [&](const Bits& s) { return subset(s, set); });
  }

  void search(std::size_t var, Bits& set, std::size_t size) {
    if (size + (nvars - var) <= best) return;
    if (var == nvars) {
      best = size;
      return;
    }
    set[var / 64] |= std::uint64_t{1} << (var % 64);
    if (admissible(set)) search(var + 1, set, size + 1);
    set[var / 64] &= ~(std::uint64_t{1} << (var % 64));
    search(var + 1, set, size);
  }
};

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()->same_variables(*ring_)) throw RingMismatch("generator does not belong to the ideal's ring");
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::variables(RingPtr ring, const std::vector<std::string>& names) {
  std::vector<Polynomial> gens;
  for (const auto& n : names) gens.push_back(Polynomial::variable(ring, n));
  return Ideal(std::move(ring), std::move(gens));
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner() const { return groebner(ring_->order()); }

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const TermOrder& order) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  RingPtr target = order == ring_->order() ? ring_ : ring_->with_order(order);
  std::shared_ptr<const GroebnerBasis> gb;
  if (gens_.empty()) {
    gb = std::make_shared<const GroebnerBasis>(GroebnerBasis::from_reduced(target, {}));
  } else {
    gb = std::make_shared<const GroebnerBasis>(buchberger(to_ring(gens_, target)));
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.try_emplace(key, gb).first->second;
}

std::shared_ptr<const GroebnerBasis> Ideal::canonical_basis() const {
  return groebner(TermOrder::grevlex(TermOrder::natural_priority(ring_->num_variables())));
}

void Ideal::seed_basis(GroebnerBasis gb) const {
  if (!same_ring(gb.ring(), ring_)) throw RingMismatch("seeded basis uses a different order");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->bases.try_emplace(ring_->order().key(), std::make_shared<const GroebnerBasis>(std::move(gb)));
}

bool Ideal::is_unit() const { return groebner()->is_unit(); }

bool Ideal::is_zero() const { return gens_.empty(); }

Ideal Ideal::in_ring(const RingPtr& target) const { return Ideal(target, to_ring(gens_, target)); }

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ')';
  return os.str();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g.in_ring(a.ring()));
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  const std::string t = ring->fresh_name("t");
  RingPtr ext = ring->with_eliminable({t});
  Polynomial tv = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(tv * g.in_ring(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(ext));
  return Ideal(ring, to_ring(eliminate(gens, ring->variables()), ring));
}

Ideal quotient(const Ideal& a, const Polynomial& f) {
  const RingPtr& ring = a.ring();
  Polynomial g = f.in_ring(ring);
  if (g.is_zero()) return Ideal::unit(ring);
  if (g.is_constant()) return a;
  Ideal meet = intersect(a, Ideal(ring, {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) {
    Polynomial q(ring);
    if (!h.divide_exact(g, q)) throw Error("internal: generator of I ∩ (f) is not divisible by f");
    gens.push_back(std::move(q));
  }
  return Ideal(ring, std::move(gens));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  if (b.is_zero()) return Ideal::unit(a.ring());
  std::optional<Ideal> acc;
  for (const auto& g : b.generators()) {
    Ideal q = quotient(a, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
  const RingPtr& ring = a.ring();
  Polynomial g = f.in_ring(ring);
  if (g.is_zero()) return Ideal::unit(ring);
  if (g.is_constant() || a.is_zero()) return a;
  const std::string t = ring->fresh_name("t");
  RingPtr ext = ring->with_eliminable({t});
  std::vector<Polynomial> gens = to_ring(a.generators(), ext);
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, t) * g.in_ring(ext));
  return Ideal(ring, to_ring(eliminate(gens, ring->variables()), ring));
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  if (b.is_zero()) return Ideal::unit(a.ring());
  if (b.generators().size() == 1) return saturate(a, b.generators().front());
  Ideal current = a;
  for (;;) {
    Ideal next = quotient(current, b);
    if (equals(next, current)) return current;
    current = std::move(next);
  }
}

Ideal frobenius_power(const Ideal& a) {
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.frobenius());
  Ideal out(a.ring(), std::move(gens));
  // The p-th powers of a reduced basis form the reduced basis of I^[p]: S is
  // free over S^p on the monomials with exponents below p, so leading terms
  // of I^[p] are multiples of p-th powers of leading terms of I.
  std::vector<Polynomial> basis;
  for (const auto& g : a.groebner()->elements()) basis.push_back(g.frobenius());
  out.seed_basis(GroebnerBasis::from_reduced(a.ring(), std::move(basis)));
  return out;
}

bool equals(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  const auto& ea = a.canonical_basis()->elements();
  const auto& eb = b.canonical_basis()->elements();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].terms() != eb[i].terms()) return false;
  }
  return true;
}

bool contains(const Ideal& a, const Polynomial& f) {
  auto gb = a.groebner();
  return normal_form(f.in_ring(gb->ring()), *gb).is_zero();
}

bool contains(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& g) { return contains(a, g); });
}

bool radical_member(const Polynomial& f, const Ideal& a) {
  const RingPtr& ring = a.ring();
  Polynomial g = f.in_ring(ring);
  if (g.is_zero()) return true;
  const std::string t = ring->fresh_name("t");
  RingPtr ext = ring->with_eliminable({t});
  std::vector<Polynomial> gens = to_ring(a.generators(), ext);
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, t) * g.in_ring(ext));
  return buchberger(gens).is_unit();
}

Ideal initial_ideal(const Ideal& a, std::size_t y) {
  auto gb = a.groebner(a.ring()->order().with_variable_first(y));
  std::vector<Polynomial> gens;
  for (const auto& g : gb->elements()) gens.push_back(g.initial_form(y).in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

std::size_t max_independent_set(const std::vector<Monomial>& leading, std::size_t nvars) {
  IndependentSearch search{nvars, {}, 0};
  for (const auto& m : leading) {
    Bits b = support_bits(m);
    if (b.empty()) b.assign((nvars + 63) / 64, 0);
    search.supports.push_back(std::move(b));
  }
  Bits set((nvars + 63) / 64, 0);
  if (nvars == 0) return 0;
  search.search(0, set, 0);
  return search.best;
}

std::size_t dimension(const Ideal& a) {
  auto gb = a.canonical_basis();
  if (gb->is_unit()) throw Error("dimension of the unit ideal is undefined");
  std::vector<Monomial> leading;
  for (const auto& g : gb->elements()) leading.push_back(g.leading_monomial());
  return max_independent_set(leading, a.ring()->num_variables());
}

}  // namespace fsplit
