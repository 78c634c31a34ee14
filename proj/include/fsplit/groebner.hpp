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

#ifndef FSPLIT_GROEBNER_HPP
#define FSPLIT_GROEBNER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

struct BuchbergerOptions {
  /// Record each basis element as a combination of the input generators.
  bool track_cofactors = false;
  /// Abort with BudgetExceeded after this many S-pairs have been reduced.
  std::optional<std::size_t> pair_budget;
};

/// Process-wide default pair budget, read once from FSPLIT_GB_PAIR_BUDGET.
std::optional<std::size_t> default_pair_budget();

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial, no term of any element divisible by another leading monomial.
/// With cofactors, elements[i] == sum_j cofactors[i][j] * generators[j].
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const RingPtr& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool has_cofactors() const noexcept { return !cofactors_.empty() || elements_.empty(); }
  const std::vector<std::vector<Polynomial>>& cofactors() const noexcept { return cofactors_; }

  bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }
  bool is_zero_ideal() const noexcept { return elements_.empty(); }

  /// Wraps a basis known to be reduced by construction (no Buchberger run).
  static GroebnerBasis from_reduced(RingPtr ring, std::vector<Polynomial> elements);

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, const BuchbergerOptions&);

  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<Polynomial> generators_;
  std::vector<std::vector<Polynomial>> cofactors_;
};

/// Reduced Gröbner basis of the ideal generated by `generators` under their
/// ring's order. Zero generators are dropped; an empty input throws Error
/// since it fixes no ring. Deterministic: pairs are taken by (lcm degree, i, j) with the
/// product and chain criteria applied (Gebauer-Möller).
GroebnerBasis buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& options = {});
/// Same, after moving the generators to their ring with `order`.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrder& order, bool track_cofactors);

/// Full reduction of f by `divisors` (any order of divisors; the first one
/// whose leading monomial divides the current term is used). When quotients
/// is non-null it receives q_i with f = sum q_i * divisors[i] + remainder.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                  std::vector<Polynomial>* quotients = nullptr);

/// Unique remainder of f modulo the basis. Throws RingMismatch on an order
/// mismatch between f and the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Coefficients c_j with f == sum c_j * generators[j], or nullopt when f is
/// not in the ideal. Requires a basis computed with cofactors.
std::optional<std::vector<Polynomial>> express_in_ideal(const Polynomial& f, const GroebnerBasis& gb);

/// True iff every S-polynomial of the basis reduces to zero modulo it.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb);
/// Monic, minimal and tail-reduced.
bool is_reduced(const GroebnerBasis& gb);

/// Generators of the ideal intersected with the subring on the variables in
/// `keep`. Uses an elimination order (weight 1 on the eliminated block, then
/// grevlex), or pure lex with the eliminated variables largest when
/// `pure_lex` is set. Results are returned in the input ring.
std::vector<Polynomial> eliminate(std::span<const Polynomial> generators, const std::vector<std::string>& keep,
                                  bool pure_lex = false);

/// S-polynomial of two monic polynomials.
Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);

}  // namespace fsplit

#endif  // FSPLIT_GROEBNER_HPP
