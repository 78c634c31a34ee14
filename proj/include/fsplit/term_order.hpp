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

#ifndef FSPLIT_TERM_ORDER_HPP
#define FSPLIT_TERM_ORDER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fsplit/monomial.hpp"

namespace fsplit {

/// A monomial order: zero or more weight rows compared first, then a lex or
/// graded reverse lex tie-break over a variable priority (largest first).
///
/// Lex with one weight row e_y is "lex with y largest"; a single weight row w
/// followed by lex realizes "a term order refining w".
class TermOrder {
 public:
  enum class Base { Lex, Grevlex };

  TermOrder() = default;

  static TermOrder lex(std::vector<std::size_t> priority);
  static TermOrder grevlex(std::vector<std::size_t> priority);
  static TermOrder weight_then_lex(std::vector<Exponent> weight, std::vector<std::size_t> priority);
  static TermOrder weight_then_grevlex(std::vector<Exponent> weight, std::vector<std::size_t> priority);
  /// Identity priority: variable 0 largest.
  static std::vector<std::size_t> natural_priority(std::size_t nvars);

  /// Same order with an extra weight row compared before everything else.
  TermOrder refined_by(std::vector<Exponent> weight) const;
  /// Weight row e_var in front: var-degree first, then this order.
  TermOrder with_variable_first(std::size_t var) const;

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  Base base() const noexcept { return base_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  const std::vector<std::vector<Exponent>>& weights() const noexcept { return weights_; }
  std::size_t num_variables() const noexcept { return priority_.size(); }

  /// Canonical text used as a cache key and in JSON output.
  std::string key() const;

  bool operator==(const TermOrder&) const = default;

 private:
  TermOrder(Base base, std::vector<std::size_t> priority, std::vector<std::vector<Exponent>> weights);

  Base base_ = Base::Grevlex;
  std::vector<std::size_t> priority_;
  std::vector<std::vector<Exponent>> weights_;
};

}  // namespace fsplit

#endif  // FSPLIT_TERM_ORDER_HPP
