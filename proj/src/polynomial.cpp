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

#include "fsplit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

void sort_terms(std::vector<Term>& terms, const TermOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&order](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff v = ring->field().from_int(c);
  std::vector<Term> terms;
  if (v != 0) terms.push_back({Monomial(ring->num_variables()), v});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw Error("variable index out of range");
  Monomial m = Monomial::variable(ring->num_variables(), index);
  return Polynomial(std::move(ring), {Term{std::move(m), 1}});
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  std::size_t idx = ring->index_of(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, Coeff c) {
  if (mono.size() != ring->num_variables()) throw Error("monomial length does not match the ring");
  c %= ring->characteristic();
  std::vector<Term> terms;
  if (c != 0) terms.push_back({std::move(mono), c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& field = ring->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    if (t.mono.size() != ring->num_variables()) throw Error("monomial length does not match the ring");
    auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff % ring->characteristic());
    if (!inserted) it->second = field.add(it->second, t.coeff % ring->characteristic());
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  sort_terms(out, ring->order());
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable_product(RingPtr ring) {
  Monomial m(std::vector<Exponent>(ring->num_variables(), 1));
  return Polynomial(std::move(ring), {Term{std::move(m), 1}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("polynomials belong to different rings");
}

std::vector<Term> Polynomial::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                                    const Ring& ring) {
  const auto& field = ring.field();
  const auto& order = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Coeff s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  return Polynomial(ring_, merge(terms_, other.terms_, false, *ring_));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_ring(other);
  return Polynomial(ring_, merge(terms_, other.terms_, true, *ring_));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  if (terms_.empty() || other.terms_.empty()) return Polynomial(ring_);
  if (terms_.size() == 1) return other.mul_term(terms_[0].mono, terms_[0].coeff);
  if (other.terms_.size() == 1) return mul_term(other.terms_[0].mono, other.terms_[0].coeff);
  const auto& field = ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Coeff c = field.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, c);
      if (!inserted) it->second = field.add(it->second, c);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  sort_terms(out, ring_->order());
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& mono, Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * mono, ring_->field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius() const {
  const std::uint32_t p = ring_->characteristic();
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Raising every exponent to the p-th multiple preserves the relative order.
  for (const auto& t : terms_) out.push_back({t.mono.pow(p), t.coeff});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(ring_->field().inv(terms_[0].coeff));
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Exponent Polynomial::degree_in(std::size_t var) const noexcept {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Polynomial Polynomial::initial_form(std::size_t var) const {
  if (var >= ring_->num_variables()) throw Error("variable index out of range");
  Exponent d = degree_in(var);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == d) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::coefficient_in(std::size_t var, Exponent k) const {
  if (var >= ring_->num_variables()) throw Error("variable index out of range");
  std::vector<Term> out;
  Monomial shift = Monomial::variable(ring_->num_variables(), var, k);
  for (const auto& t : terms_) {
    if (t.mono[var] == k) out.push_back({t.mono / shift, t.coeff});
  }
  // Removing a fixed power of var from every term keeps the order intact.
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) return Polynomial(target, terms_);
  if (target->characteristic() != ring_->characteristic()) {
    throw RingMismatch("cannot move a polynomial between different characteristics");
  }
  std::vector<std::size_t> map(ring_->num_variables(), 0);
  std::vector<bool> mapped(ring_->num_variables(), false);
  for (std::size_t i = 0; i < ring_->num_variables(); ++i) {
    if (auto idx = target->find(ring_->variables()[i])) {
      map[i] = *idx;
      mapped[i] = true;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> exps(target->num_variables(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mapped[i]) throw UnknownVariable(ring_->variables()[i]);
      exps[map[i]] = t.mono[i];
    }
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  sort_terms(out, target->order());
  return Polynomial(target, std::move(out));
}

bool Polynomial::divide_exact(const Polynomial& divisor, Polynomial& quotient) const {
  check_ring(divisor);
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  const auto& field = ring_->field();
  const Term& lead = divisor.leading_term();
  Coeff lead_inv = field.inv(lead.coeff);
  Polynomial rest = *this;
  std::vector<Term> q;
  while (!rest.is_zero()) {
    const Term& t = rest.terms_.front();
    if (!lead.mono.divides(t.mono)) return false;
    Monomial m = t.mono / lead.mono;
    Coeff c = field.mul(t.coeff, lead_inv);
    rest = rest - divisor.mul_term(m, c);
    q.push_back({std::move(m), c});
  }
  // Quotient terms are produced in strictly decreasing order.
  quotient = Polynomial(ring_, std::move(q));
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const auto& vars = ring_->variables();
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = ring_->field().to_signed(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) os << '*';
      os << vars[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_ || !other.ring_) return terms_ == other.terms_;
  if (!ring_->same_variables(*other.ring_)) return false;
  if (ring_->order() == other.ring_->order()) return terms_ == other.terms_;
  return terms_.size() == other.terms_.size() && in_ring(other.ring_).terms_ == other.terms_;
}

std::pair<Monomial, Coeff> leading_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw Error("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return {best->mono, best->coeff};
}

std::vector<Polynomial> to_ring(const std::vector<Polynomial>& polys, const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(f.in_ring(target));
  return out;
}

}  // namespace fsplit
