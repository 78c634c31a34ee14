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

#ifndef FSPLIT_POLYNOMIAL_HPP
#define FSPLIT_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/field.hpp"
#include "fsplit/monomial.hpp"
#include "fsplit/ring.hpp"

namespace fsplit {

struct Term {
  Monomial mono;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial over F_p. Terms are stored strictly descending in the
/// ring's monomial order and never carry a zero coefficient, so the zero
/// polynomial has no terms and equality is term-list equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial term(RingPtr ring, Monomial mono, Coeff c);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Product of all ring variables.
  static Polynomial variable_product(RingPtr ring);
  /// Precondition: terms strictly descending in the ring order, no zeros.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Throws Error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  Coeff leading_coeff() const { return leading_term().coeff; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scale(Coeff c) const;
  Polynomial mul_term(const Monomial& mono, Coeff c) const;
  Polynomial pow(std::uint64_t e) const;
  /// a^p computed term-wise (coefficients are fixed by Frobenius on F_p).
  Polynomial frobenius() const;
  Polynomial monic() const;

  std::uint64_t total_degree() const noexcept;
  Exponent degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }
  /// Sum of the terms of maximal degree in var.
  Polynomial initial_form(std::size_t var) const;
  /// Coefficient of var^k, viewing the polynomial in var over the others.
  Polynomial coefficient_in(std::size_t var, Exponent k) const;

  /// Same polynomial in another ring over the same field; variables are
  /// matched by name. Throws UnknownVariable if a used variable is missing.
  Polynomial in_ring(const RingPtr& target) const;

  /// Exact division; returns false if divisor does not divide *this.
  bool divide_exact(const Polynomial& divisor, Polynomial& quotient) const;

  /// Canonical text: terms in ring order, coefficients as signed residues.
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void check_ring(const Polynomial& other) const;
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                                 const Ring& ring);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// (Monomial, coefficient) of the greatest term under order.
std::pair<Monomial, Coeff> leading_term(const Polynomial& f, const TermOrder& order);

std::vector<Polynomial> to_ring(const std::vector<Polynomial>& polys, const RingPtr& target);

}  // namespace fsplit

#endif  // FSPLIT_POLYNOMIAL_HPP
