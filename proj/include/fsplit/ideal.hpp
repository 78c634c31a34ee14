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

#ifndef FSPLIT_IDEAL_HPP
#define FSPLIT_IDEAL_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fsplit/groebner.hpp"
#include "fsplit/polynomial.hpp"

namespace fsplit {

/// An ideal given by generators. Equality is mathematical (reduced bases),
/// never generator-list identity. Reduced bases are memoized per term order;
/// copies share the memo, which tolerates concurrent readers.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// Ideal generated by the named variables.
  static Ideal variables(RingPtr ring, const std::vector<std::string>& names);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced basis under the ring's own order.
  std::shared_ptr<const GroebnerBasis> groebner() const;
  std::shared_ptr<const GroebnerBasis> groebner(const TermOrder& order) const;
  /// Reduced basis under grevlex over the ring's variable sequence; the
  /// basis used for equality and dimension.
  std::shared_ptr<const GroebnerBasis> canonical_basis() const;

  /// Installs a basis known to be the reduced basis of this ideal under
  /// its ring's order (used where the basis is available in closed form).
  void seed_basis(GroebnerBasis gb) const;

  bool is_unit() const;
  bool is_zero() const;

  /// Same ideal in a ring over a superset of the used variables.
  Ideal in_ring(const RingPtr& target) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// I ∩ J by eliminating t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
/// I : (f), via I ∩ (f) divided by f.
Ideal quotient(const Ideal& a, const Polynomial& f);
/// I : J = ∩_g I : (g) over the generators of J.
Ideal quotient(const Ideal& a, const Ideal& b);
/// I : f^∞ by Rabinowitsch: eliminate t from I + (1 - t*f).
Ideal saturate(const Ideal& a, const Polynomial& f);
/// I : J^∞ by iterating I : J until it stabilizes.
Ideal saturate(const Ideal& a, const Ideal& b);
/// Ideal generated by the p-th powers of the generators.
Ideal frobenius_power(const Ideal& a);

bool equals(const Ideal& a, const Ideal& b);
bool contains(const Ideal& a, const Polynomial& f);
/// b ⊆ a.
bool contains(const Ideal& a, const Ideal& b);
/// f ∈ √I, decided by 1 ∈ I + (1 - t*f).
bool radical_member(const Polynomial& f, const Ideal& a);
/// Krull dimension of S/I from the leading monomials of the canonical basis.
/// Throws Error for the unit ideal.
std::size_t dimension(const Ideal& a);
/// in_y(I): initial forms in y of the reduced basis under the ring order
/// refined to compare y-degree first, which is a Gröbner basis for the
/// weight e_y. Returned in the original ring.
Ideal initial_ideal(const Ideal& a, std::size_t y);

/// Size of a largest variable set containing the support of none of `leading`.
std::size_t max_independent_set(const std::vector<Monomial>& leading, std::size_t nvars);

}  // namespace fsplit

#endif  // FSPLIT_IDEAL_HPP
