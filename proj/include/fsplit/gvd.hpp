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


#ifndef FSPLIT_GVD_HPP
#define FSPLIT_GVD_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fsplit/ideal.hpp"

namespace fsplit {

enum class Condition2 { Holds, HoldsByDegenerateEquality, Inconclusive };
enum class Degeneracy { UnitLink, EqualRadicals, Nondegenerate, NotAGvd };

std::string to_string(Condition2 c);
std::string to_string(Degeneracy d);

/// A basis element y*q + r with q, r free of y.
struct GvdPair {
  Polynomial q;
  Polynomial r;
};

/// in_y(I), the link C(y, I) = in_y(I) : y^∞ and the deletion N(y, I), all in
/// the ring of I, together with the basis they were read from.
struct GvdDecomposition {
  std::size_t y = 0;
  Ideal ideal;
  Ideal inY;
  Ideal link;
  Ideal deletion;
  std::vector<GvdPair> pairs;
  std::vector<Polynomial> hPart;
  /// in_y(I) = C ∩ (N + (y)).
  bool condition1 = false;
  Condition2 condition2 = Condition2::Inconclusive;
  Degeneracy degeneracy = Degeneracy::NotAGvd;

  const RingPtr& ring() const noexcept { return ideal.ring(); }
  const std::string& variable() const { return ring()->variables()[y]; }
};

/// Decomposes I at y from its reduced basis under the ring order refined to
/// compare y-degree first. Throws PreconditionError when I = (1).
GvdDecomposition decompose(const Ideal& ideal, std::size_t y);
GvdDecomposition decompose(const Ideal& ideal, const std::string& y);

/// Degenerate when C = (1) or √C = √N (checked by radical membership of the
/// generators of C in N; N ⊆ C always).
Degeneracy classify_degeneracy(const GvdDecomposition& d);

/// Conservative test that no minimal prime of C is a minimal prime of N:
/// N : C = N gives Holds; equal radicals give HoldsByDegenerateEquality;
/// otherwise the part of N supported on V(C) is compared by dimension with
/// C, which is a heuristic (exact only when C is equidimensional).
Condition2 check_condition2(const GvdDecomposition& d);

struct GvdTreeNode {
  /// "I" at the root, otherwise e.g. "lk_e3 ∘ del_e2 ∘ del_e1" (last
  /// operation leftmost).
  std::string label;
  Ideal ideal;
  /// Absent at leaves.
  std::shared_ptr<const GvdDecomposition> decomposition;
  /// Why the recursion stopped: "unit", "zero", "variables", "exhausted",
  /// "not-gvd"; empty for internal nodes.
  std::string stop_reason;
  std::shared_ptr<GvdTreeNode> link;
  std::shared_ptr<GvdTreeNode> deletion;

  bool is_leaf() const noexcept { return !link && !deletion; }
};

struct GvdTree {
  std::shared_ptr<GvdTreeNode> root;
  /// Condition (2) is taken from unmixedness of I, which the caller asserts.
  bool asserted_unmixed = true;
  /// False when condition (1) failed at some node.
  bool lex_compatible = true;

  std::vector<std::shared_ptr<const GvdTreeNode>> leaves() const;
  std::vector<std::shared_ptr<const GvdTreeNode>> nodes() const;
  std::shared_ptr<const GvdTreeNode> find(const std::string& label) const;
};

/// Decomposes at each listed variable in turn, contracting link and deletion
/// to the ring without that variable. A branch stops at (1), (0), an ideal
/// generated by variables, a failure of condition (1), or when the list runs
/// out. Sibling branches are computed concurrently when `parallel` is set.
GvdTree lex_gvd_tree(const Ideal& ideal, const std::vector<std::string>& variables, bool parallel = false);

/// True iff the reduced basis consists of variables only.
bool is_variable_generated(const Ideal& ideal);

}  // namespace fsplit

#endif  // FSPLIT_GVD_HPP
