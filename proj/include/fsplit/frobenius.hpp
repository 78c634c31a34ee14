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

#ifndef FSPLIT_FROBENIUS_HPP
#define FSPLIT_FROBENIUS_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fsplit/ideal.hpp"
#include "fsplit/polynomial.hpp"

namespace fsplit {

/// The trace map Tr: a monomial m goes to (m * x_1...x_n)^{1/p} / (x_1...x_n)
/// when m * x_1...x_n is a p-th power and to 0 otherwise. Linear over F_p.
Polynomial trace(const Polynomial& g);

/// The map φ_f = Tr(f^{p-1} · -). f^{p-1} is computed once per candidate and
/// shared between copies.
class SplittingCandidate {
 public:
  explicit SplittingCandidate(Polynomial f);

  const Polynomial& polynomial() const noexcept { return f_; }
  const RingPtr& ring() const noexcept { return f_.ring(); }
  /// f^{p-1}.
  const Polynomial& power() const;

 private:
  struct Cache {
    std::once_flag once;
    Polynomial value;
  };
  Polynomial f_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Tr(f^{p-1} * g).
Polynomial apply_splitting(const SplittingCandidate& cand, const Polynomial& g);

struct SplittingStatus {
  /// Tr(f^{p-1}) == 1.
  bool verified = false;
  /// Set to c^{-1} when Tr(f^{p-1}) is a nonzero constant c != 1. The map
  /// c^{-1} * φ_f is then a splitting with the same compatible ideals as φ_f.
  /// Rescaling f itself does not help since c^{p-1} = 1.
  std::optional<Coeff> scale;
  Polynomial trace_value;
};

SplittingStatus check_splitting(const SplittingCandidate& cand);
/// True iff Tr(f^{p-1}) == 1, i.e. φ_f(1) = 1, which by p^{-1}-linearity
/// gives φ_f ∘ F = identity.
bool is_splitting(const SplittingCandidate& cand);
/// Cheap sufficient condition: the leading monomial of f under `order` is
/// the product of all variables (order lexicographic in the caller's use).
bool leading_term_precheck(const SplittingCandidate& cand, const TermOrder& order);

struct CompatibilityResult {
  bool verified = false;
  std::string method;
  /// Descriptions of the generators (and grid monomials) that failed.
  std::vector<std::string> witnesses;
};

/// φ_f(I) ⊆ I decided by the Fedder membership f^{p-1} * g ∈ I^[p] for
/// every generator g.
CompatibilityResult fedder_check(const SplittingCandidate& cand, const Ideal& ideal);
bool is_compatible_fedder(const SplittingCandidate& cand, const Ideal& ideal);

struct BruteforceLimits {
  std::size_t max_variables = 6;
  std::uint32_t max_characteristic = 3;
};

/// φ_f(I) ⊆ I straight from the definition: φ_f(m * g) ∈ I for every
/// generator g and every monomial m with exponents in [0, p-1]. Throws
/// InstanceTooLarge outside `limits`.
CompatibilityResult bruteforce_check(const SplittingCandidate& cand, const Ideal& ideal,
                                     const BruteforceLimits& limits = {});
bool is_compatible_bruteforce(const SplittingCandidate& cand, const Ideal& ideal,
                              const BruteforceLimits& limits = {});

struct ClosureReport {
  bool splits = false;
  bool precondition_i = false;
  bool precondition_j = false;
  bool sum = false;
  bool intersection = false;
  bool quotient = false;
  /// φ(g) ∈ I for the generators of I and J.
  bool image_in_ideal = false;
  /// Random h with h^p ∈ I satisfy h ∈ I (same for J).
  bool radical_spot_check = false;
  std::vector<std::string> notes;

  bool all_passed() const noexcept {
    return splits && precondition_i && precondition_j && sum && intersection && quotient && image_in_ideal &&
           radical_spot_check;
  }
};

/// Verifies the closure laws for compatibly split ideals on I and J. A
/// failing precondition is reported, not thrown.
ClosureReport check_closure_laws(const SplittingCandidate& cand, const Ideal& i, const Ideal& j,
                                 std::uint64_t seed = 1);

struct DescentReport {
  bool lex_leading_term_ok = false;
  bool splits = false;
  bool compatible_with_ideal = false;
  bool initial_ideal = false;
  bool colon = false;
  bool plus_variable = false;
  Polynomial initial_form;
  std::vector<std::string> notes;

  bool preconditions() const noexcept { return lex_leading_term_ok && splits && compatible_with_ideal; }
  bool all_passed() const noexcept { return preconditions() && initial_ideal && colon && plus_variable; }
};

/// Knutson descent at y: if f has lex leading term x_1...x_n with y largest,
/// splits and compatibly splits I, then in_y(f) compatibly splits in_y(I),
/// in_y(I) : y and in_y(I) + (y). Each is checked with the Fedder criterion.
DescentReport verify_knutson_descent(const SplittingCandidate& cand, const Ideal& ideal, std::size_t y);

}  // namespace fsplit

#endif  // FSPLIT_FROBENIUS_HPP
