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

#include "fsplit/monomial.hpp"

#include <algorithm>
#include <limits>

#include "fsplit/errors.hpp"

namespace fsplit {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { refresh(); }

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent e) {
  std::vector<Exponent> exps(nvars, 0);
  exps[index] = e;
  return Monomial(std::move(exps));
}

void Monomial::refresh() noexcept {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
  }
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = std::uint64_t{exps_[i]} + other.exps_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
    out.exps_[i] = static_cast<Exponent>(s);
  }
  out.degree_ = degree_ + other.degree_;
  out.mask_ = mask_ | other.mask_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] - other.exps_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(exps));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(exps));
}

Monomial Monomial::pow(std::uint64_t e) const {
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && e > std::numeric_limits<Exponent>::max() / exps_[i]) throw ExponentOverflow();
    exps[i] = static_cast<Exponent>(exps_[i] * e);
  }
  return Monomial(std::move(exps));
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace fsplit
