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

#include "fsplit/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

void validate_priority(const std::vector<std::size_t>& priority) {
  std::vector<bool> seen(priority.size(), false);
  for (std::size_t v : priority) {
    if (v >= priority.size() || seen[v]) throw Error("term order priority is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

TermOrder::TermOrder(Base base, std::vector<std::size_t> priority, std::vector<std::vector<Exponent>> weights)
    : base_(base), priority_(std::move(priority)), weights_(std::move(weights)) {
  validate_priority(priority_);
  for (const auto& w : weights_) {
    if (w.size() != priority_.size()) throw Error("weight vector length does not match variable count");
  }
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority) { return TermOrder(Base::Lex, std::move(priority), {}); }

TermOrder TermOrder::grevlex(std::vector<std::size_t> priority) {
  return TermOrder(Base::Grevlex, std::move(priority), {});
}

TermOrder TermOrder::weight_then_lex(std::vector<Exponent> weight, std::vector<std::size_t> priority) {
  return TermOrder(Base::Lex, std::move(priority), {std::move(weight)});
}

TermOrder TermOrder::weight_then_grevlex(std::vector<Exponent> weight, std::vector<std::size_t> priority) {
  return TermOrder(Base::Grevlex, std::move(priority), {std::move(weight)});
}

std::vector<std::size_t> TermOrder::natural_priority(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

TermOrder TermOrder::refined_by(std::vector<Exponent> weight) const {
  auto weights = weights_;
  weights.insert(weights.begin(), std::move(weight));
  return TermOrder(base_, priority_, std::move(weights));
}

TermOrder TermOrder::with_variable_first(std::size_t var) const {
  std::vector<Exponent> w(priority_.size(), 0);
  w.at(var) = 1;
  return refined_by(std::move(w));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  for (const auto& w : weights_) {
    std::uint64_t wa = 0;
    std::uint64_t wb = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      wa += std::uint64_t{w[i]} * a[i];
      wb += std::uint64_t{w[i]} * b[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (base_ == Base::Lex) {
    for (std::size_t v : priority_) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
  }
  return 0;
}

std::string TermOrder::key() const {
  std::ostringstream os;
  os << (base_ == Base::Lex ? "lex" : "grevlex") << '[';
  for (std::size_t i = 0; i < priority_.size(); ++i) os << (i ? "," : "") << priority_[i];
  os << ']';
  for (const auto& w : weights_) {
    os << "w(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ')';
  }
  return os.str();
}

}  // namespace fsplit
