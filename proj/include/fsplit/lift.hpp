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


#ifndef FSPLIT_LIFT_HPP
#define FSPLIT_LIFT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fsplit/frobenius.hpp"
#include "fsplit/gvd.hpp"

namespace fsplit {

/// Pass/fail of every property a lift must satisfy.
struct LiftChecks {
  bool u_divides_g = false;
  bool v_in_ideal = false;
  /// u*(y*q + r) - v*q ∈ N.
  bool well_defined = false;
  /// in_y(fNew) = y*g.
  bool initial_form = false;
  bool f_in_ideal = false;
  bool splits = false;
  bool compatible = false;

  bool all_passed() const noexcept {
    return u_divides_g && v_in_ideal && well_defined && initial_form && f_in_ideal && splits && compatible;
  }
};

struct LiftCertificate {
  Ideal ideal;
  GvdDecomposition d;
  Polynomial g;
  Polynomial u;
  Polynomial q;
  Polynomial r;
  Polynomial s;
  /// y*u + s.
  Polynomial v;
  /// v * g / u.
  Polynomial fNew;
  LiftChecks checks;
  /// Hypotheses taken on trust (condition (2) when the check was inconclusive).
  std::vector<std::string> assertions;
  bool heuristic = false;

  bool valid() const noexcept { return checks.all_passed(); }
};

struct LiftOptions {
  /// Largest number of basis pairs combined when searching for (q, r).
  std::size_t max_pair_support = 3;
};

/// y*q + r from the span of the basis pairs with q and y*q + r both
/// nonzerodivisors modulo N. Single pairs are tried first, then F_p
/// combinations of growing support. Throws PreconditionError when the
/// search is exhausted.
GvdPair find_q_r(const GvdDecomposition& d, const LiftOptions& options = {});

/// True iff N : h = N.
bool is_nonzerodivisor(const Ideal& n, const Polynomial& h);

/// g_f with f*(y*q + r) - g_f*q ∈ N, read off as the cofactor of q in an
/// expression of f*(y*q + r) over {q} ∪ gens(N). Throws PreconditionError
/// when f*(y*q + r) ∉ (q) + N.
Polynomial psi_image(const GvdDecomposition& d, const GvdPair& qr, const Polynomial& f);

/// v = y*u + s with s free of y and v ≡ g_u mod N, from the y-graded
/// pieces of the normal form of g_u modulo N.
Polynomial linearize_representative(const GvdDecomposition& d, const Polynomial& u, const Polynomial& g_u);

/// fNew = v*g/u for a nondegenerate decomposition of I at y. Hypothesis
/// violations throw PreconditionError naming the hypothesis; the returned
/// certificate carries the post-construction checks.
LiftCertificate lift_splitting(const Ideal& ideal, const GvdDecomposition& d, const Polynomial& g,
                               const Polynomial& u, const LiftOptions& options = {});

struct IuDecomposition {
  Polynomial c;
  Polynomial m;
};

/// c ∈ C and m ∈ N with i*u = v*c + m. Throws PreconditionError when a
/// membership or exact division fails.
IuDecomposition decompose_iu(const GvdDecomposition& d, const GvdPair& qr, const Polynomial& u, const Polynomial& v,
                             const Polynomial& i);

struct DegenerateLift {
  Polynomial candidate;
  bool splits = false;
  bool compatible = false;
};

/// For C = (1): ℓ*g with ℓ = y + r the basis element whose q-part is a unit.
/// For equal radicals: y*g. Throws PreconditionError for a nondegenerate d.
DegenerateLift degenerate_lift(const Ideal& ideal, const GvdDecomposition& d, const Polynomial& g);

/// Recomputes every check of a certificate from its data alone, using only
/// Gröbner and Frobenius primitives.
LiftChecks validate_certificate(const LiftCertificate& cert);

struct LiftLevel {
  std::string variable;
  Polynomial u;
  std::vector<std::string> labels;
  std::vector<LiftCertificate> certificates;
  Polynomial fNew;
  /// All nodes of the level produced the same polynomial.
  bool consistent = false;
};

struct LiftChain {
  std::vector<LiftLevel> levels;
  Polynomial result;

  bool valid() const noexcept;
};

/// Lifts a splitting up a gvd tree, deepest level first. `start` splits
/// the leaves; `schedule[k]` is the u used at the k-th level counted from
/// the bottom. Node ideals are extended to `start`'s ring.
LiftChain lift_chain(const GvdTree& tree, const std::vector<std::string>& variables,
                     const std::vector<Polynomial>& schedule, const Polynomial& start,
                     const LiftOptions& options = {});

}  // namespace fsplit

#endif  // FSPLIT_LIFT_HPP
