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

#include "fsplit/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

using Reducers = std::vector<const Polynomial*>;

/// Core of every reduction. The working polynomial is kept ascending so the
/// current leading term can be popped from the back.
Polynomial reduce_impl(const Polynomial& f, const Reducers& divisors, std::vector<std::vector<Term>>* quotients) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  const auto& order = ring->order();
  std::vector<Coeff> lead_inv;
  lead_inv.reserve(divisors.size());
  for (const Polynomial* g : divisors) {
    if (!same_ring(g->ring(), ring)) throw RingMismatch("divisor lives in a different ring or order");
    lead_inv.push_back(field.inv(g->leading_coeff()));
  }
  if (quotients != nullptr) quotients->assign(divisors.size(), {});

  std::vector<Term> work(f.terms().rbegin(), f.terms().rend());
  std::vector<Term> remainder;
  std::vector<Term> scratch;
  while (!work.empty()) {
    const Term& lt = work.back();
    std::size_t found = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i]->leading_monomial().divides(lt.mono)) {
        found = i;
        break;
      }
    }
    if (found == divisors.size()) {
      remainder.push_back(std::move(work.back()));
      work.pop_back();
      continue;
    }
    const Polynomial& g = *divisors[found];
    const Coeff c = field.mul(lt.coeff, lead_inv[found]);
    Monomial m = lt.mono / g.leading_monomial();
    work.pop_back();

    // work -= c * m * tail(g), both walked in ascending order.
    const auto& gt = g.terms();
    scratch.clear();
    scratch.reserve(work.size() + gt.size());
    std::size_t i = 0;
    std::size_t j = gt.size();
    Monomial shifted;
    bool have_shifted = false;
    while (j > 1 || i < work.size()) {
      if (j > 1 && !have_shifted) {
        shifted = gt[j - 1].mono * m;
        have_shifted = true;
      }
      int cmp;
      if (j <= 1) {
        cmp = -1;
      } else if (i >= work.size()) {
        cmp = 1;
      } else {
        cmp = order.compare(work[i].mono, shifted);
      }
      if (cmp < 0) {
        scratch.push_back(std::move(work[i++]));
      } else if (cmp > 0) {
        scratch.push_back({std::move(shifted), field.neg(field.mul(c, gt[j - 1].coeff))});
        --j;
        have_shifted = false;
      } else {
        Coeff v = field.sub(work[i].coeff, field.mul(c, gt[j - 1].coeff));
        if (v != 0) scratch.push_back({std::move(work[i].mono), v});
        ++i;
        --j;
        have_shifted = false;
      }
    }
    std::swap(work, scratch);
    if (quotients != nullptr) (*quotients)[found].push_back({std::move(m), c});
  }
  return Polynomial::from_sorted_terms(ring, std::move(remainder));
}

struct Pair {
  std::uint64_t degree;
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const noexcept {
    return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
  }
};

/// Working state of one Buchberger run; the reduced basis is extracted by
/// buchberger() once the pair queue is empty.
struct Buchberger {
  Buchberger(RingPtr ring, std::size_t ngens, bool track, std::optional<std::size_t> budget)
      : ring_(std::move(ring)), ngens_(ngens), track_(track), budget_(budget) {}

  void add_input(const Polynomial& f, std::size_t index) {
    if (f.is_zero()) return;
    std::vector<Polynomial> cof;
    if (track_) {
      cof.assign(ngens_, Polynomial(ring_));
      cof[index] = Polynomial::constant(ring_, ring_->field().inv(f.leading_coeff()));
    }
    insert(f.monic(), std::move(cof));
  }

  void run() {
    while (!pairs_.empty()) {
      Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (budget_ && ++processed_ > *budget_) {
        throw BudgetExceeded("Groebner pair budget of " + std::to_string(*budget_) + " exhausted");
      }
      const Polynomial& a = polys_[pair.i];
      const Polynomial& b = polys_[pair.j];
      Monomial ma = pair.lcm / a.leading_monomial();
      Monomial mb = pair.lcm / b.leading_monomial();
      Polynomial s = a.mul_term(ma, 1) - b.mul_term(mb, 1);
      std::vector<Polynomial> cof;
      if (track_) {
        cof.resize(ngens_);
        for (std::size_t g = 0; g < ngens_; ++g) {
          cof[g] = cofactors_[pair.i][g].mul_term(ma, 1) - cofactors_[pair.j][g].mul_term(mb, 1);
        }
      }
      Polynomial r = reduce_active(s, cof);
      if (r.is_zero()) continue;
      Coeff inv = ring_->field().inv(r.leading_coeff());
      for (auto& c : cof) c = c.scale(inv);
      insert(r.scale(inv), std::move(cof));
    }
  }

  Polynomial reduce_active(const Polynomial& f, std::vector<Polynomial>& cof) {
    Reducers reducers;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i]) continue;
      reducers.push_back(&polys_[i]);
      ids.push_back(i);
    }
    std::vector<std::vector<Term>> quotients;
    Polynomial r = reduce_impl(f, reducers, track_ ? &quotients : nullptr);
    if (track_) apply_quotients(cof, quotients, ids);
    return r;
  }

  void apply_quotients(std::vector<Polynomial>& cof, std::vector<std::vector<Term>>& quotients,
                       const std::vector<std::size_t>& ids) {
    for (std::size_t k = 0; k < quotients.size(); ++k) {
      if (quotients[k].empty()) continue;
      Polynomial q = Polynomial::from_sorted_terms(ring_, std::move(quotients[k]));
      for (std::size_t g = 0; g < ngens_; ++g) {
        if (!cofactors_[ids[k]][g].is_zero()) cof[g] -= q * cofactors_[ids[k]][g];
      }
    }
  }

  /// Gebauer-Möller update for the new element h.
  void insert(Polynomial h, std::vector<Polynomial> cof) {
    const std::size_t k = polys_.size();
    const Monomial& lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    if (track_) cofactors_.push_back(std::move(cof));

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      const Monomial& li = polys_[i].leading_monomial();
      cands.push_back({i, li.lcm(lh), li.coprime(lh)});
    }
    // Chain criterion among the new pairs: drop (i,k) when some other new
    // pair's lcm divides its lcm. Processed candidates that were dropped no
    // longer count as witnesses.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (b == a || !cands[b].alive) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          // Equal lcms: keep the first survivor only.
          if (cands[b].lcm == cands[a].lcm && b > a) continue;
          cands[a].alive = false;
          break;
        }
      }
    }
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& lij = it->lcm;
      if (lh.divides(lij) && lij != polys_[it->i].leading_monomial().lcm(lh) &&
          lij != polys_[it->j].leading_monomial().lcm(lh)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& c : cands) {
      if (c.alive && !c.coprime) pairs_.insert(Pair{c.lcm.degree(), c.i, k, std::move(c.lcm)});
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (active_[i] && lh.divides(polys_[i].leading_monomial())) active_[i] = false;
    }
    active_[k] = true;
  }

  RingPtr ring_;
  std::size_t ngens_;
  bool track_;
  std::optional<std::size_t> budget_;
  std::size_t processed_ = 0;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<std::vector<Polynomial>> cofactors_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

std::optional<std::size_t> default_pair_budget() {
  static const std::optional<std::size_t> budget = []() -> std::optional<std::size_t> {
    const char* env = std::getenv("FSPLIT_GB_PAIR_BUDGET");
    if (env == nullptr || *env == '\0') return std::nullopt;
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }();
  return budget;
}

GroebnerBasis GroebnerBasis::from_reduced(RingPtr ring, std::vector<Polynomial> elements) {
  GroebnerBasis gb;
  gb.ring_ = std::move(ring);
  gb.elements_ = std::move(elements);
  gb.generators_ = gb.elements_;
  return gb;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& options) {
  if (generators.empty()) throw Error("buchberger needs at least one generator to fix the ring");
  RingPtr ring = generators.front().ring();
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("generators belong to different rings");
  }
  auto budget = options.pair_budget ? options.pair_budget : default_pair_budget();
  Buchberger engine(ring, generators.size(), options.track_cofactors, budget);
  for (std::size_t i = 0; i < generators.size(); ++i) engine.add_input(generators[i], i);
  engine.run();

  // Interreduce the surviving elements into the reduced basis.
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < engine.polys_.size(); ++i) {
    if (engine.active_[i]) ids.push_back(i);
  }
  // Unreduced inputs can leave non-minimal elements active.
  std::vector<std::size_t> minimal;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    const Monomial& la = engine.polys_[ids[a]].leading_monomial();
    bool redundant = false;
    for (std::size_t b = 0; b < ids.size() && !redundant; ++b) {
      if (b == a) continue;
      const Monomial& lb = engine.polys_[ids[b]].leading_monomial();
      redundant = lb.divides(la) && (lb != la || b < a);
    }
    if (!redundant) minimal.push_back(ids[a]);
  }
  ids = std::move(minimal);
  const auto& order = ring->order();
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(engine.polys_[a].leading_monomial(), engine.polys_[b].leading_monomial()) < 0;
  });

  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.generators_.assign(generators.begin(), generators.end());
  const bool track = options.track_cofactors;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    const Polynomial& g = engine.polys_[ids[a]];
    Reducers others;
    std::vector<std::size_t> other_ids;
    for (std::size_t b = 0; b < ids.size(); ++b) {
      if (b == a) continue;
      others.push_back(&engine.polys_[ids[b]]);
      other_ids.push_back(ids[b]);
    }
    Polynomial lead = Polynomial::from_sorted_terms(ring, {g.leading_term()});
    std::vector<std::vector<Term>> quotients;
    Polynomial tail = reduce_impl(g - lead, others, track ? &quotients : nullptr);
    gb.elements_.push_back(lead + tail);
    if (track) {
      std::vector<Polynomial> cof = engine.cofactors_[ids[a]];
      for (std::size_t k = 0; k < quotients.size(); ++k) {
        if (quotients[k].empty()) continue;
        Polynomial q = Polynomial::from_sorted_terms(ring, std::move(quotients[k]));
        for (std::size_t j = 0; j < cof.size(); ++j) {
          if (!engine.cofactors_[other_ids[k]][j].is_zero()) cof[j] -= q * engine.cofactors_[other_ids[k]][j];
        }
      }
      gb.cofactors_.push_back(std::move(cof));
    }
  }
  return gb;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrder& order, bool track_cofactors) {
  if (generators.empty()) throw Error("buchberger needs at least one generator to fix the ring");
  RingPtr ring = generators.front().ring()->with_order(order);
  std::vector<Polynomial> moved;
  moved.reserve(generators.size());
  for (const auto& g : generators) moved.push_back(g.in_ring(ring));
  BuchbergerOptions options;
  options.track_cofactors = track_cofactors;
  return buchberger(moved, options);
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, std::vector<Polynomial>* quotients) {
  Reducers reducers;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw Error("cannot reduce by the zero polynomial");
    reducers.push_back(&g);
  }
  std::vector<std::vector<Term>> q;
  Polynomial r = reduce_impl(f, reducers, quotients != nullptr ? &q : nullptr);
  if (quotients != nullptr) {
    quotients->clear();
    for (auto& terms : q) quotients->push_back(Polynomial::from_sorted_terms(f.ring(), std::move(terms)));
  }
  return r;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring())) throw RingMismatch("normal form: polynomial and basis use different orders");
  return reduce(f, gb.elements());
}

std::optional<std::vector<Polynomial>> express_in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
  if (!gb.has_cofactors()) throw Error("express_in_ideal needs a basis computed with cofactors");
  if (!same_ring(f.ring(), gb.ring())) throw RingMismatch("express_in_ideal: polynomial and basis use different orders");
  std::vector<Polynomial> quotients;
  Polynomial r = reduce(f, gb.elements(), &quotients);
  if (!r.is_zero()) return std::nullopt;
  std::vector<Polynomial> coeffs(gb.generators().size(), Polynomial(gb.ring()));
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (!gb.cofactors()[i][j].is_zero()) coeffs[j] += quotients[i] * gb.cofactors()[i][j];
    }
  }
  return coeffs;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  const auto& field = a.ring()->field();
  return a.mul_term(l / a.leading_monomial(), field.inv(a.leading_coeff())) -
         b.mul_term(l / b.leading_monomial(), field.inv(b.leading_coeff()));
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (!reduce(s_polynomial(el[i], el[j]), el).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i].is_zero() || el[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : el[i].terms()) {
        if (el[j].leading_monomial().divides(t.mono)) return false;
      }
    }
  }
  return true;
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> generators, const std::vector<std::string>& keep,
                                  bool pure_lex) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  std::vector<bool> kept(ring->num_variables(), false);
  for (const auto& name : keep) kept[ring->index_of(name)] = true;
  std::vector<Exponent> weight(ring->num_variables(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) weight[i] = kept[i] ? 0 : 1;
  TermOrder order;
  if (pure_lex) {
    std::vector<std::size_t> priority;
    for (std::size_t v : ring->order().priority()) {
      if (!kept[v]) priority.push_back(v);
    }
    for (std::size_t v : ring->order().priority()) {
      if (kept[v]) priority.push_back(v);
    }
    order = TermOrder::lex(std::move(priority));
  } else {
    order = TermOrder::weight_then_grevlex(std::move(weight), ring->order().priority());
  }
  GroebnerBasis gb = buchberger(generators, order, false);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (std::size_t i = 0; i < kept.size() && free; ++i) {
      if (!kept[i] && g.involves(i)) free = false;
    }
    if (free) out.push_back(g.in_ring(ring));
  }
  return out;
}

}  // namespace fsplit
