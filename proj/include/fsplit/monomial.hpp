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

#ifndef FSPLIT_MONOMIAL_HPP
#define FSPLIT_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fsplit {

using Exponent = std::uint32_t;

/// Dense exponent vector over the ring's variables, with cached total degree
/// and a 64-bit support mask used to reject divisibility tests early.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent e = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  std::uint64_t support_mask() const noexcept { return mask_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  /// Exponent sums are overflow-checked (throws ExponentOverflow).
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial pow(std::uint64_t e) const;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

  std::size_t hash() const noexcept;

 private:
  void refresh() noexcept;

  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace fsplit

#endif  // FSPLIT_MONOMIAL_HPP
