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

#ifndef FSPLIT_FIELD_HPP
#define FSPLIT_FIELD_HPP

#include <cstdint>

namespace fsplit {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p. Elements are plain residues in [0, p-1]; the modulus is
/// carried by the field object rather than by each element.
class PrimeField {
 public:
  /// Throws fsplit::Error unless p is a prime in [2, 2^31].
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Throws fsplit::Error on zero.
  Coeff inv(Coeff a) const;
  Coeff from_int(std::int64_t v) const noexcept;
  /// Signed representative in (-p/2, p/2], used for display.
  std::int64_t to_signed(Coeff a) const noexcept;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace fsplit

#endif  // FSPLIT_FIELD_HPP
