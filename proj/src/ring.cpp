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

#include "fsplit/ring.hpp"

#include <algorithm>
#include <cctype>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Ring::Ring(std::uint32_t p, std::vector<std::string> variables, TermOrder order)
    : field_(p), vars_(std::move(variables)), order_(std::move(order)) {
  if (order_.num_variables() != vars_.size()) throw Error("term order does not match the variable count");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!is_identifier(vars_[i])) throw Error("invalid variable name '" + vars_[i] + "'");
    if (!index_.emplace(vars_[i], i).second) throw Error("duplicate variable name '" + vars_[i] + "'");
  }
}

RingPtr Ring::make(std::uint32_t p, std::vector<std::string> variables, TermOrder order) {
  return RingPtr(new Ring(p, std::move(variables), std::move(order)));
}

RingPtr Ring::make_lex(std::uint32_t p, std::vector<std::string> variables) {
  auto n = variables.size();
  return make(p, std::move(variables), TermOrder::lex(TermOrder::natural_priority(n)));
}

RingPtr Ring::make_grevlex(std::uint32_t p, std::vector<std::string> variables) {
  auto n = variables.size();
  return make(p, std::move(variables), TermOrder::grevlex(TermOrder::natural_priority(n)));
}

std::optional<std::size_t> Ring::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw UnknownVariable(name);
  return *idx;
}

RingPtr Ring::with_order(TermOrder order) const { return make(characteristic(), vars_, std::move(order)); }

RingPtr Ring::with_variable_first(std::size_t var) const { return with_order(order_.with_variable_first(var)); }

RingPtr Ring::without(const std::vector<std::string>& names) const {
  std::vector<bool> drop(vars_.size(), false);
  for (const auto& n : names) drop[index_of(n)] = true;
  std::vector<std::size_t> new_index(vars_.size(), 0);
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (drop[i]) continue;
    new_index[i] = kept.size();
    kept.push_back(vars_[i]);
  }
  std::vector<std::size_t> priority;
  for (std::size_t v : order_.priority()) {
    if (!drop[v]) priority.push_back(new_index[v]);
  }
  TermOrder order = order_.base() == TermOrder::Base::Lex ? TermOrder::lex(priority) : TermOrder::grevlex(priority);
  const auto& weights = order_.weights();
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    std::vector<Exponent> w;
    bool nonzero = false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (drop[i]) continue;
      w.push_back((*it)[i]);
      nonzero = nonzero || (*it)[i] != 0;
    }
    if (nonzero) order = order.refined_by(std::move(w));
  }
  return make(characteristic(), std::move(kept), std::move(order));
}

RingPtr Ring::with_eliminable(const std::vector<std::string>& names) const {
  const std::size_t k = names.size();
  std::vector<std::string> vars = names;
  vars.insert(vars.end(), vars_.begin(), vars_.end());
  std::vector<std::size_t> priority;
  for (std::size_t i = 0; i < k; ++i) priority.push_back(i);
  for (std::size_t v : order_.priority()) priority.push_back(v + k);
  TermOrder order = order_.base() == TermOrder::Base::Lex ? TermOrder::lex(priority) : TermOrder::grevlex(priority);
  const auto& weights = order_.weights();
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    std::vector<Exponent> w(k, 0);
    w.insert(w.end(), it->begin(), it->end());
    order = order.refined_by(std::move(w));
  }
  std::vector<Exponent> block(vars.size(), 0);
  std::fill(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(k), 1);
  order = order.refined_by(std::move(block));
  return make(characteristic(), std::move(vars), std::move(order));
}

std::string Ring::fresh_name(const std::string& stem) const {
  if (!find(stem)) return stem;
  for (std::size_t i = 0;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!find(candidate)) return candidate;
  }
}

}  // namespace fsplit
