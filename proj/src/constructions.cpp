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


#include "fsplit/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fsplit/errors.hpp"
#include "fsplit/parse.hpp"

namespace fsplit {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows.at(i), cols.at(j));
  }
  return out;
}

void PolyMatrix::place(const PolyMatrix& block, std::size_t row, std::size_t col) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_) throw Error("block does not fit");
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) at(row + i, col + j) = block.at(i, j).in_ring(ring_);
  }
}

VarMatrix VarMatrix::generic(const std::string& stem, std::size_t rows, std::size_t cols) {
  VarMatrix m;
  const bool wide = rows > 9 || cols > 9;
  for (std::size_t i = 1; i <= rows; ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 1; j <= cols; ++j) {
      row.push_back(stem + std::to_string(i) + (wide ? "_" : "") + std::to_string(j));
    }
    m.names.push_back(std::move(row));
  }
  return m;
}

std::vector<std::string> VarMatrix::flatten() const {
  std::vector<std::string> out;
  for (const auto& row : names) out.insert(out.end(), row.begin(), row.end());
  return out;
}

PolyMatrix VarMatrix::to_poly(const RingPtr& ring) const {
  PolyMatrix m(ring, rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) m.at(i, j) = Polynomial::variable(ring, names[i][j]);
  }
  return m;
}

namespace {

struct DeterminantExpansion {
  const PolyMatrix& m;
  std::unordered_map<std::uint64_t, Polynomial> memo;

  // Determinant of rows [row, n) against the columns in `mask`.
  Polynomial expand(std::size_t row, std::uint64_t mask) {
    if (row == m.rows()) return Polynomial::constant(m.ring(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial total(m.ring());
    std::size_t position = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(mask >> j & 1)) continue;
      const Polynomial& entry = m.at(row, j);
      if (!entry.is_zero()) {
        Polynomial minor = expand(row + 1, mask & ~(std::uint64_t{1} << j));
        if (!minor.is_zero()) {
          Polynomial product = entry * minor;
          total = position % 2 == 0 ? total + product : total - product;
        }
      }
      ++position;
    }
    memo.emplace(mask, total);
    return total;
  }
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  if (m.cols() > 63) throw InstanceTooLarge("determinant limited to 63 columns");
  DeterminantExpansion expansion{m, {}};
  std::uint64_t all = m.cols() == 0 ? 0 : (std::uint64_t{1} << m.cols()) - 1;
  return expansion.expand(0, all);
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t t) {
  if (t == 0 || t > m.rows() || t > m.cols()) throw Error("minor size out of range");
  std::vector<Polynomial> out;
  for (const auto& rows : subsets(m.rows(), t)) {
    for (const auto& cols : subsets(m.cols(), t)) {
      Polynomial d = determinant(m.submatrix(rows, cols));
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

Ideal minors_ideal(const PolyMatrix& m, std::size_t t) { return Ideal(m.ring(), minors(m, t)); }

RingPtr two_row_ring(std::uint32_t p, std::size_t big_n) {
  VarMatrix x = VarMatrix::generic("x", 2, big_n);
  return Ring::make_lex(p, x.flatten());
}

namespace {

std::size_t two_row_columns(const RingPtr& ring) { return ring->num_variables() / 2; }

Polynomial x_var(const RingPtr& ring, std::size_t i, std::size_t j) {
  std::size_t big_n = two_row_columns(ring);
  return Polynomial::variable(ring, (i - 1) * big_n + (j - 1));
}

}  // namespace

Ideal two_row_minors(const RingPtr& ring, std::size_t n) {
  std::size_t big_n = two_row_columns(ring);
  if (n < 2 || n > big_n) throw Error("need 2 <= n <= N");
  VarMatrix x = VarMatrix::generic("x", 2, big_n);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(j);
  return minors_ideal(x.to_poly(ring).submatrix({0, 1}, cols), 2);
}

Polynomial two_row_splitting_polynomial(const RingPtr& ring, std::size_t n) {
  std::size_t big_n = two_row_columns(ring);
  if (n < 1 || n > big_n) throw Error("need 1 <= n <= N");
  Polynomial f = x_var(ring, 2, 1);
  for (std::size_t i = 1; i < n; ++i) {
    f *= x_var(ring, 1, i) * x_var(ring, 2, i + 1) - x_var(ring, 1, i + 1) * x_var(ring, 2, i);
  }
  f *= x_var(ring, 1, n);
  for (std::size_t j = n + 1; j <= big_n; ++j) f *= x_var(ring, 1, j) * x_var(ring, 2, j);
  return f;
}

SplittingCandidate two_row_splitting(const RingPtr& ring, std::size_t n) {
  if (n < 2) throw Error("need 2 <= n <= N");
  return SplittingCandidate(two_row_splitting_polynomial(ring, n));
}

TwoRowPipeline two_row_lift_pipeline(const RingPtr& ring, std::size_t n) {
  std::size_t big_n = two_row_columns(ring);
  if (n < 2 || n > big_n) throw Error("need 2 <= n <= N");
  TwoRowPipeline out;
  Polynomial current = two_row_splitting_polynomial(ring, 1);
  for (std::size_t k = 2; k <= n; ++k) {
    Ideal I = two_row_minors(ring, k);
    Polynomial y = x_var(ring, 2, k);
    GvdDecomposition d = decompose(I, big_n + k - 1);
    Polynomial g;
    if (!current.divide_exact(y, g)) throw Error("internal: current splitting not divisible by y");
    out.certificates.push_back(lift_splitting(I, d, g, x_var(ring, 1, k - 1)));
    current = out.certificates.back().fNew;
  }
  out.result = current;
  return out;
}

void Graph::add_edge(const std::string& name, const std::string& u, const std::string& v) {
  if (u == v) throw Error("loop at vertex " + u);
  for (const auto& e : edges) {
    if (e.name == name) throw Error("repeated edge name " + name);
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) throw Error("repeated edge " + u + " " + v);
  }
  for (const auto& w : {u, v}) {
    if (std::find(vertices.begin(), vertices.end(), w) == vertices.end()) vertices.push_back(w);
  }
  edges.push_back({name, u, v});
}

Graph Graph::parse(const std::string& text) {
  Graph graph;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, u, v, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> u >> v) || (fields >> extra)) throw ParseError("expected `name u v`", line_no, 1);
    try {
      graph.add_edge(name, u, v);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  return graph;
}

Ideal graph_toric_ideal(const Graph& graph, std::uint32_t p) {
  std::vector<std::string> edge_names;
  for (const auto& e : graph.edges) edge_names.push_back(e.name);
  RingPtr edge_ring = Ring::make_lex(p, edge_names);
  if (graph.edges.empty()) return Ideal::zero(edge_ring);
  std::vector<std::string> t_names;
  std::map<std::string, std::string> t_of;
  for (const auto& v : graph.vertices) {
    std::string name = "t_" + v;
    while (edge_ring->find(name) || std::find(t_names.begin(), t_names.end(), name) != t_names.end()) {
      name += "_";
    }
    t_of[v] = name;
    t_names.push_back(name);
  }
  RingPtr big = edge_ring->with_eliminable(t_names);
  std::vector<Polynomial> gens;
  for (const auto& e : graph.edges) {
    gens.push_back(Polynomial::variable(big, e.name) -
                   Polynomial::variable(big, t_of[e.u]) * Polynomial::variable(big, t_of[e.v]));
  }
  std::vector<Polynomial> kept = eliminate(gens, edge_names);
  return Ideal(edge_ring, to_ring(kept, edge_ring));
}

Graph example_graph() {
  Graph g;
  const std::pair<int, int> edges[] = {{1, 4}, {2, 5}, {3, 6}, {3, 5}, {7, 8}, {2, 4},
                                       {4, 9}, {6, 9}, {6, 7}, {1, 8}, {5, 7}};
  int k = 1;
  for (const auto& [u, v] : edges) g.add_edge("e" + std::to_string(k++), std::to_string(u), std::to_string(v));
  std::sort(g.vertices.begin(), g.vertices.end(), [](const std::string& a, const std::string& b) {
    return std::stoi(a) < std::stoi(b);
  });
  return g;
}

std::vector<Polynomial> example_graph_splittings(const RingPtr& ring) {
  auto e = [&](int i) { return Polynomial::variable(ring, "e" + std::to_string(i)); };
  auto product_except = [&](std::set<int> skip) {
    Polynomial f = Polynomial::constant(ring, 1);
    for (int i = 1; i <= 11; ++i) {
      if (!skip.count(i)) f *= e(i);
    }
    return f;
  };
  Polynomial a = e(3) * e(11) - e(4) * e(9);
  Polynomial b = e(2) * e(7) * e(9) - e(6) * e(8) * e(11);
  Polynomial c = e(1) * e(5) * e(8) - e(7) * e(9) * e(10);
  return {a * product_except({3, 11}), a * b * product_except({2, 3, 7, 9, 11}), a * b * c * e(4) * e(6) * e(10)};
}

Ideal DoubleDetInstance::ideal() const { return sum(minors_ideal(H, s), minors_ideal(V, t)); }

Polynomial DoubleDetInstance::block_det(std::size_t k) const {
  if (k < 1 || k > r) throw Error("block index out of range");
  return determinant(blocks[k - 1].to_poly(ring));
}

namespace {

Polynomial diagonal_minor(const PolyMatrix& m, std::size_t row, std::size_t col) {
  std::size_t size = std::min(m.rows() - row, m.cols() - col);
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < size; ++i) {
    rows.push_back(row + i);
    cols.push_back(col + i);
  }
  return determinant(m.submatrix(rows, cols));
}

}  // namespace

Polynomial DoubleDetInstance::delta_upper(std::size_t shift) const { return diagonal_minor(Dstar, 0, shift); }

Polynomial DoubleDetInstance::delta_lower(std::size_t shift) const { return diagonal_minor(Dsub, shift, 0); }

std::vector<Polynomial> DoubleDetInstance::j_generators(std::size_t i) const {
  if (i < 1 || i + 2 > r) throw Error("J_i needs 1 <= i <= r - 2");
  std::vector<Polynomial> out{block_det(i), block_det(i + 1), block_det(i + 2)};
  for (std::size_t shift = 1; shift < n; ++shift) {
    out.push_back(delta_upper(shift));
    out.push_back(delta_lower(shift));
  }
  return out;
}

PolyMatrix DoubleDetInstance::h_window(std::size_t i) const {
  if (i < 1 || i + 2 > r) throw Error("window needs 1 <= i <= r - 2");
  std::vector<std::size_t> rows, cols;
  for (std::size_t a = 0; a < m; ++a) rows.push_back(a);
  for (std::size_t b = (i - 1) * n; b < (i + 2) * n; ++b) cols.push_back(b);
  return H.submatrix(rows, cols);
}

DoubleDetInstance double_det_instance(std::uint32_t p, std::size_t m, std::size_t n, std::size_t r, std::size_t s,
                                      std::size_t t) {
  if (m == 0 || n == 0 || r == 0) throw Error("matrix sizes must be positive");
  if (s == 0 || s > std::min(m, r * n) || t == 0 || t > std::min(r * m, n)) throw Error("minor size out of range");
  DoubleDetInstance inst{m, n, r, s, t, nullptr, {}, PolyMatrix(nullptr, 0, 0), PolyMatrix(nullptr, 0, 0),
                         PolyMatrix(nullptr, 0, 0), PolyMatrix(nullptr, 0, 0)};
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= r; ++k) {
    std::string stem = r <= 3 ? std::string(1, "xyz"[k - 1]) : "x" + std::to_string(k) + "_";
    inst.blocks.push_back(VarMatrix::generic(stem, m, n));
    for (const auto& name : inst.blocks.back().flatten()) names.push_back(name);
  }
  inst.ring = Ring::make_lex(p, names);
  inst.H = PolyMatrix(inst.ring, m, r * n);
  inst.V = PolyMatrix(inst.ring, r * m, n);
  const std::size_t upper_rows = (r + 1) / 2, upper_cols = r / 2 + 1;
  inst.Dstar = PolyMatrix(inst.ring, upper_rows * m, upper_cols * n);
  inst.Dsub = PolyMatrix(inst.ring, upper_cols * m, upper_rows * n);
  for (std::size_t k = 1; k <= r; ++k) {
    PolyMatrix block = inst.blocks[k - 1].to_poly(inst.ring);
    inst.H.place(block, 0, (k - 1) * n);
    inst.V.place(block, (k - 1) * m, 0);
    inst.Dstar.place(block, ((k + 1) / 2 - 1) * m, (k / 2) * n);
    inst.Dsub.place(block, (k / 2) * m, ((k + 1) / 2 - 1) * n);
  }
  return inst;
}

std::vector<Polynomial> double_det_factors(const DoubleDetInstance& inst) {
  std::vector<Polynomial> out;
  for (std::size_t k = 1; k <= inst.r; ++k) out.push_back(inst.block_det(k));
  for (std::size_t shift = 1; shift < inst.n; ++shift) {
    out.push_back(inst.delta_lower(shift));
    out.push_back(inst.delta_upper(shift));
  }
  return out;
}

SplittingCandidate double_det_splitting(const DoubleDetInstance& inst) {
  if (inst.s != inst.n || inst.t != inst.n || inst.m != inst.n) throw Error("double_det_splitting needs s = t = m = n");
  Polynomial f = Polynomial::constant(inst.ring, 1);
  for (const auto& factor : double_det_factors(inst)) f *= factor;
  return SplittingCandidate(std::move(f));
}

bool pairwise_coprime_leading_terms(const std::vector<Polynomial>& polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (!polys[i].leading_monomial().coprime(polys[j].leading_monomial())) return false;
    }
  }
  return true;
}

Polynomial standard_splitting(const RingPtr& ring) { return Polynomial::variable_product(ring); }

LiftCertificate split_sum_lift(const Ideal& ideal, const GvdDecomposition& d, const Polynomial& g,
                               const Polynomial& u, const std::vector<SumDecompositionTerm>& decomposition,
                               const LiftOptions& options) {
  const RingPtr& ring = d.ring();
  Polynomial ur = u.in_ring(ring);
  Polynomial combined(ring);
  for (const auto& term : decomposition) combined += term.coeff.in_ring(ring) * term.c.in_ring(ring);
  if (decomposition.empty() || combined != ur) throw PreconditionError("u = Σ coeff_i c_i", "decomposition does not sum to u");
  for (const auto& term : decomposition) {
    if (term.c.involves(d.y) || term.coeff.involves(d.y)) throw PreconditionError("terms free of y", term.c.to_string());
    if (!is_nonzerodivisor(d.deletion, term.c.in_ring(ring))) {
      throw PreconditionError("c_i nonzerodivisor modulo N", "N : c != N for c = " + term.c.to_string());
    }
  }
  Polynomial gr = g.in_ring(ring);
  Polynomial g_over_u;
  if (!gr.divide_exact(ur, g_over_u)) throw PreconditionError("u divides g", "u = " + ur.to_string());

  LiftCertificate cert;
  cert.heuristic = true;
  cert.ideal = ideal.in_ring(ring);
  cert.d = d;
  cert.g = gr;
  cert.u = ur;
  GvdPair qr = find_q_r(d, options);
  cert.q = qr.q;
  cert.r = qr.r;
  Polynomial v(ring);
  for (const auto& term : decomposition) {
    Polynomial c = term.c.in_ring(ring);
    v += term.coeff.in_ring(ring) * linearize_representative(d, c, psi_image(d, qr, c));
  }
  cert.v = v;
  cert.s = v - Polynomial::variable(ring, d.y) * ur;
  cert.fNew = v * g_over_u;
  cert.checks = validate_certificate(cert);
  return cert;
}

Ideal non_f_split_ideal(std::uint32_t p) {
  RingPtr ring = Ring::make_lex(p, {"x", "y", "z", "r", "s"});
  return Ideal(ring, {parse_polynomial(ring, "r*y"), parse_polynomial(ring, "r*z"),
                      parse_polynomial(ring, "z*(y*x - s^2)")});
}

LadderExample ladder_example(std::uint32_t p) {
  LadderExample ex;
  ex.ring = Ring::make_lex(p, {"x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22", "z11", "z12", "z21", "z22"});
  const RingPtr& ring = ex.ring;
  auto P = [&](const std::string& s) { return parse_polynomial(ring, s); };
  VarMatrix h{{{"x11", "x12", "y11", "y12", "z11"}, {"x21", "x22", "y21", "y22", "z21"}}};
  VarMatrix v{{{"x11", "x12"}, {"x21", "x22"}, {"y11", "y12"}, {"y21", "y22"}, {"z11", "z12"}}};
  VarMatrix v_minus{{{"x11", "x12"}, {"x21", "x22"}, {"y11", "y12"}, {"y21", "y22"}}};
  Ideal ih = minors_ideal(h.to_poly(ring), 2);
  ex.ideal = sum(ih, minors_ideal(v.to_poly(ring), 2));
  ex.deletion_expected = sum(ih, minors_ideal(v_minus.to_poly(ring), 2));
  ex.link_generators = Ideal(ring, {P("x11"), P("x21"), P("y11"), P("y21"), P("x12*z21 - z11*x22")});
  VarMatrix x{{{"x11", "x12"}, {"x21", "x22"}}};
  VarMatrix y{{{"y11", "y12"}, {"y21", "y22"}}};
  VarMatrix bordered{{{"x21", "x22", "z11"}, {"y11", "y12", "z11"}, {"y21", "y22", "z21"}}};
  PolyMatrix b = bordered.to_poly(ring);
  b.at(0, 2) = Polynomial(ring);
  ex.delta = P("x12*y21 - x22*y11");
  ex.f = determinant(x.to_poly(ring)) * determinant(y.to_poly(ring)) * determinant(b) * ex.delta * P("z11*z12*z22");
  ex.decomposition = {{P("x12"), P("y21")}, {P("-x22"), P("y11")}};
  return ex;
}

}  // namespace fsplit
