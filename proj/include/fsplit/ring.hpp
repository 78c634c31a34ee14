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

#ifndef FSPLIT_RING_HPP
#define FSPLIT_RING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsplit/field.hpp"
#include "fsplit/term_order.hpp"

namespace fsplit {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// F_p[x_1, ..., x_n] with a fixed monomial order. Rings are immutable and
/// shared; changing the order or the variable set produces a new ring.
class Ring {
 public:
  /// Validates: p prime, names unique identifiers, order over n variables.
  static RingPtr make(std::uint32_t p, std::vector<std::string> variables, TermOrder order);
  /// Lex with the first listed variable largest.
  static RingPtr make_lex(std::uint32_t p, std::vector<std::string> variables);
  static RingPtr make_grevlex(std::uint32_t p, std::vector<std::string> variables);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  const TermOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws UnknownVariable.
  std::size_t index_of(const std::string& name) const;

  RingPtr with_order(TermOrder order) const;
  /// Ring order refined so that var-degree is compared first.
  RingPtr with_variable_first(std::size_t var) const;
  /// Drops the named variables; the remaining order keeps its relative priority
  /// and weight rows restricted to the survivors.
  RingPtr without(const std::vector<std::string>& names) const;
  /// Prepends fresh variables; they come first in priority and carry a weight
  /// row (1 on the new block) so the result is an elimination order for them.
  RingPtr with_eliminable(const std::vector<std::string>& names) const;
  /// A variable name not present in the ring, derived from stem.
  std::string fresh_name(const std::string& stem) const;

  bool same_variables(const Ring& other) const noexcept {
    return field_ == other.field_ && vars_ == other.vars_;
  }
  bool operator==(const Ring& other) const noexcept {
    return same_variables(other) && order_ == other.order_;
  }

 private:
  Ring(std::uint32_t p, std::vector<std::string> variables, TermOrder order);

  PrimeField field_;
  std::vector<std::string> vars_;
  TermOrder order_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

}  // namespace fsplit

#endif  // FSPLIT_RING_HPP
