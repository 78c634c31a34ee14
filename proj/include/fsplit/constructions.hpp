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


#ifndef FSPLIT_CONSTRUCTIONS_HPP
#define FSPLIT_CONSTRUCTIONS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/frobenius.hpp"
#include "fsplit/gvd.hpp"
#include "fsplit/lift.hpp"

namespace fsplit {

/// Dense matrix of polynomials over one ring; zero entries are allowed.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Copies `block` with its top-left corner at (row, col).
  void place(const PolyMatrix& block, std::size_t row, std::size_t col);

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Names of a matrix of distinct variables.
struct VarMatrix {
  std::vector<std::vector<std::string>> names;

  std::size_t rows() const noexcept { return names.size(); }
  std::size_t cols() const noexcept { return names.empty() ? 0 : names[0].size(); }
  /// stem + i + j with 1-based indices (stem + i + "_" + j past 9).
  static VarMatrix generic(const std::string& stem, std::size_t rows, std::size_t cols);
  /// Row-major list of the names.
  std::vector<std::string> flatten() const;
  PolyMatrix to_poly(const RingPtr& ring) const;
};

/// Laplace expansion along rows, memoized on the set of remaining columns,
/// with zero entries skipped. Throws Error for a non-square matrix.
Polynomial determinant(const PolyMatrix& m);
/// All nonzero t x t minors, rows and columns in lexicographic order.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t t);
/// Throws Error when t is 0 or exceeds a dimension.
Ideal minors_ideal(const PolyMatrix& m, std::size_t t);

/// F_p[x11..x1N, x21..x2N] under lex in that (row-major, diagonal) order.
RingPtr two_row_ring(std::uint32_t p, std::size_t big_n);
/// I_2 of the first n columns of the generic 2 x N matrix.
Ideal two_row_minors(const RingPtr& ring, std::size_t n);
/// x21 * D_{12} * D_{23} ... D_{n-1,n} * x1n * x1,n+1 x2,n+1 ... x1N x2N where
/// D_{ij} = x1i x2j - x1j x2i; at n = 1 this is the product of all variables.
Polynomial two_row_splitting_polynomial(const RingPtr& ring, std::size_t n);
/// Throws Error unless 2 <= n <= N.
SplittingCandidate two_row_splitting(const RingPtr& ring, std::size_t n);

struct TwoRowPipeline {
  std::vector<LiftCertificate> certificates;
  Polynomial result;
};

/// Lifts the product of all variables to two_row_splitting_polynomial(n) one column at
/// a time: at step k, decompose I_2(X_k) at x2k and lift with u = x1,k-1.
TwoRowPipeline two_row_lift_pipeline(const RingPtr& ring, std::size_t n);

struct Graph {
  struct Edge {
    std::string name;
    std::string u;
    std::string v;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  /// One edge per line: `name u v`; '#' starts a comment. Rejects loops and
  /// repeated edge names or vertex pairs.
  static Graph parse(const std::string& text);
  void add_edge(const std::string& name, const std::string& u, const std::string& v);
};

/// Kernel of e_uv -> t_u t_v, by eliminating the t-variables. The result
/// lives in lex over the edge names in edge order.
Ideal graph_toric_ideal(const Graph& graph, std::uint32_t p);

/// The 9-vertex, 11-edge graph with e1 = {1,4}, ..., e11 = {5,7}.
Graph example_graph();
/// The splittings of the three lift steps on example_graph(), after
/// decomposing at e3, e2 and e1 in that order.
std::vector<Polynomial> example_graph_splittings(const RingPtr& ring);

struct DoubleDetInstance {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  RingPtr ring;
  std::vector<VarMatrix> blocks;
  PolyMatrix H;
  PolyMatrix V;
  /// Staircase layouts: block X_k of Dstar at block (ceil(k/2), floor(k/2)+1),
  /// of Dsub at (floor(k/2)+1, ceil(k/2)), 1-based.
  PolyMatrix Dstar;
  PolyMatrix Dsub;

  Ideal ideal() const;
  Polynomial block_det(std::size_t k) const;
  /// Minor of Dstar along the diagonal from (1, s+1).
  Polynomial delta_upper(std::size_t shift) const;
  /// Minor of Dsub along the diagonal from (s+1, 1).
  Polynomial delta_lower(std::size_t shift) const;
  /// (det X_i, det X_i+1, det X_i+2, Δ^1, Δ_1, ..., Δ^{n-1}, Δ_{n-1}), 1 <= i <= r-2.
  std::vector<Polynomial> j_generators(std::size_t i) const;
  /// Columns of X_i, X_i+1, X_i+2 of H.
  PolyMatrix h_window(std::size_t i) const;
};

/// Blocks named x, y, z for r <= 3 (entries x11, ...), otherwise x1_11,
/// x2_11, ...; lex over the blocks in order, each row-major.
DoubleDetInstance double_det_instance(std::uint32_t p, std::size_t m, std::size_t n, std::size_t r, std::size_t s,
                                      std::size_t t);
/// Factors det X_1, ..., det X_r, then Δ_1, Δ^1, ..., Δ_{n-1}, Δ^{n-1}.
std::vector<Polynomial> double_det_factors(const DoubleDetInstance& inst);
/// Requires s = t = m = n.
SplittingCandidate double_det_splitting(const DoubleDetInstance& inst);

/// Leading monomials under the ring order are pairwise coprime.
bool pairwise_coprime_leading_terms(const std::vector<Polynomial>& polys);

/// Product of all variables.
Polynomial standard_splitting(const RingPtr& ring);

struct SumDecompositionTerm {
  Polynomial coeff;
  Polynomial c;
};

/// Heuristic lift when no single factor of g is a nonzerodivisor modulo N:
/// u = Σ coeff_i c_i, each c_i is lifted to v_i, and v = Σ coeff_i v_i
/// replaces u in g. The certificate is marked heuristic; failed checks are
/// reported in it, not thrown.
LiftCertificate split_sum_lift(const Ideal& ideal, const GvdDecomposition& d, const Polynomial& g,
                               const Polynomial& u, const std::vector<SumDecompositionTerm>& decomposition,
                               const LiftOptions& options = {});

/// I = (ry, rz, z(yx - s^2)) in lex x > y > z > r > s; S/I is not F-split.
Ideal non_f_split_ideal(std::uint32_t p);

/// The ladder ideal I_2(H) + I_2(V) with H 2x5 and V 5x2 built from 2x2
/// blocks x, y and the z-column (z11, z21) / z-row (z11, z12).
struct LadderExample {
  RingPtr ring;
  Ideal ideal;
  /// I_2(H) + I_2(V without its last row).
  Ideal deletion_expected;
  /// (x11, x21, y11, y21, x12 z21 - z11 x22); the link is this plus N.
  Ideal link_generators;
  /// The splitting of C and N, z12 times a z12-free cofactor.
  Polynomial f;
  /// x12 y21 - x22 y11 and its split as x12 * y21 - x22 * y11.
  Polynomial delta;
  std::vector<SumDecompositionTerm> decomposition;
};
LadderExample ladder_example(std::uint32_t p);

}  // namespace fsplit

#endif  // FSPLIT_CONSTRUCTIONS_HPP
