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


#include "fsplit/lift.hpp"

#include <functional>

#include "fsplit/errors.hpp"

namespace fsplit {

namespace {

Polynomial y_variable(const GvdDecomposition& d) { return Polynomial::variable(d.ring(), d.y); }

// Calls visit(subset) for every k-subset of {0, ..., n-1} in lexicographic order
// until visit returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Polynomial> with_deletion(const Polynomial& first, const GvdDecomposition& d) {
  std::vector<Polynomial> gens{first};
  for (const auto& h : d.deletion.generators()) gens.push_back(h.in_ring(d.ring()));
  return gens;
}

}  // namespace

bool is_nonzerodivisor(const Ideal& n, const Polynomial& h) {
  if (h.is_zero()) return false;
  if (n.is_zero()) return true;
  return equals(quotient(n, h), n);
}

GvdPair find_q_r(const GvdDecomposition& d, const LiftOptions& options) {
  const RingPtr& ring = d.ring();
  const std::uint32_t p = ring->characteristic();
  const Polynomial y = y_variable(d);
  auto good = [&](const GvdPair& pair) {
    return is_nonzerodivisor(d.deletion, pair.q) && is_nonzerodivisor(d.deletion, y * pair.q + pair.r);
  };
  std::optional<GvdPair> found;
  const std::size_t k_max = std::min(options.max_pair_support, d.pairs.size());
  for (std::size_t k = 1; k <= k_max && !found; ++k) {
    for_each_subset(d.pairs.size(), k, [&](const std::vector<std::size_t>& subset) {
      // The first coefficient is normalized to 1; the rest range over F_p^*.
      std::vector<Coeff> coeffs(k, 1);
      for (;;) {
        GvdPair combo{Polynomial(ring), Polynomial(ring)};
        for (std::size_t i = 0; i < k; ++i) {
          combo.q += d.pairs[subset[i]].q.scale(coeffs[i]);
          combo.r += d.pairs[subset[i]].r.scale(coeffs[i]);
        }
        if (!combo.q.is_zero() && good(combo)) {
          found = combo;
          return true;
        }
        std::size_t i = 1;
        while (i < k && ++coeffs[i] == p) coeffs[i++] = 1;
        if (i >= k) return false;
      }
    });
  }
  if (!found) {
    throw PreconditionError("q and y*q + r nonzerodivisors modulo N",
                            "no combination of at most " + std::to_string(k_max) + " basis pairs qualifies");
  }
  return *found;
}

Polynomial psi_image(const GvdDecomposition& d, const GvdPair& qr, const Polynomial& f) {
  const RingPtr& ring = d.ring();
  const Polynomial y = y_variable(d);
  Polynomial fr = f.in_ring(ring);
  Polynomial w = fr * (y * qr.q + qr.r);
  auto gens = with_deletion(qr.q, d);
  GroebnerBasis gb = buchberger(gens, BuchbergerOptions{true, default_pair_budget()});
  auto cofactors = express_in_ideal(w, gb);
  if (!cofactors) throw PreconditionError("f in C", "f*(y*q + r) is not in (q) + N for f = " + fr.to_string());
  Polynomial g_f = (*cofactors)[0];
  if (!contains(d.deletion, w - g_f * qr.q)) {
    throw Error("internal: psi representative fails its defining congruence");
  }
  return g_f;
}

Polynomial linearize_representative(const GvdDecomposition& d, const Polynomial& u, const Polynomial& g_u) {
  const RingPtr& ring = d.ring();
  const Polynomial y = y_variable(d);
  Polynomial ur = u.in_ring(ring);
  auto gb = d.deletion.groebner();
  Polynomial w = normal_form(g_u.in_ring(ring), *gb);
  Polynomial w0 = w.coefficient_in(d.y, 0);
  Polynomial w1 = w.coefficient_in(d.y, 1);
  Polynomial rest = w - w0 - y * w1;
  if (!rest.is_zero() || !normal_form(w1 - ur, *gb).is_zero()) {
    throw PreconditionError("representative linear in y",
                            "normal form modulo N is not y*u + s: " + w.to_string());
  }
  return y * ur + w0;
}

LiftCertificate lift_splitting(const Ideal& ideal, const GvdDecomposition& d, const Polynomial& g,
                               const Polynomial& u, const LiftOptions& options) {
  const RingPtr& ring = d.ring();
  Ideal I = ideal.in_ring(ring);
  const Polynomial y = y_variable(d);
  Polynomial gr = g.in_ring(ring);
  Polynomial ur = u.in_ring(ring);

  if (!d.condition1) throw PreconditionError("geometric vertex decomposition", "condition (1) fails at " + d.variable());
  if (d.degeneracy != Degeneracy::Nondegenerate) {
    throw PreconditionError("nondegenerate decomposition", "decomposition is " + to_string(d.degeneracy));
  }
  if (gr.involves(d.y)) throw PreconditionError("g free of y", "g involves " + d.variable());
  SplittingCandidate yg(y * gr);
  if (!is_splitting(yg)) throw PreconditionError("y*g is a splitting", "Tr((y*g)^(p-1)) != 1");
  if (!is_compatible_fedder(yg, d.link)) throw PreconditionError("y*g compatibly splits C", "Fedder check failed");
  if (!is_compatible_fedder(yg, d.deletion)) throw PreconditionError("y*g compatibly splits N", "Fedder check failed");
  if (ur.is_zero() || ur.involves(d.y)) throw PreconditionError("u free of y", "u = " + ur.to_string());
  if (!contains(d.link, ur)) throw PreconditionError("u in C", "u = " + ur.to_string() + " is not in the link");
  Polynomial g_over_u;
  if (!gr.divide_exact(ur, g_over_u)) throw PreconditionError("u divides g", "u = " + ur.to_string());
  if (!is_nonzerodivisor(d.deletion, ur)) {
    throw PreconditionError("u nonzerodivisor modulo N", "N : u != N for u = " + ur.to_string());
  }

  LiftCertificate cert;
  cert.ideal = I;
  cert.d = d;
  cert.g = gr;
  cert.u = ur;
  if (d.condition2 == Condition2::Inconclusive) {
    cert.assertions.push_back("condition (2) asserted: no minimal prime of C is a minimal prime of N");
  }
  GvdPair qr = find_q_r(d, options);
  cert.q = qr.q;
  cert.r = qr.r;
  Polynomial g_u = psi_image(d, qr, ur);
  cert.v = linearize_representative(d, ur, g_u);
  cert.s = cert.v - y * ur;
  cert.fNew = cert.v * g_over_u;
  cert.checks = validate_certificate(cert);
  return cert;
}

IuDecomposition decompose_iu(const GvdDecomposition& d, const GvdPair& qr, const Polynomial& u, const Polynomial& v,
                             const Polynomial& i) {
  const RingPtr& ring = d.ring();
  const Polynomial y = y_variable(d);
  Polynomial ur = u.in_ring(ring);
  Polynomial vr = v.in_ring(ring);
  Polynomial ir = i.in_ring(ring);
  Polynomial lead = y * qr.q + qr.r;
  auto gens = with_deletion(lead, d);
  GroebnerBasis gb = buchberger(gens, BuchbergerOptions{true, default_pair_budget()});
  auto cofactors = express_in_ideal(ir * qr.q, gb);
  if (!cofactors) throw PreconditionError("i in I", "i*q is not in (y*q + r) + N");
  IuDecomposition out;
  out.c = (*cofactors)[0];
  Polynomial n = ir * qr.q - out.c * lead;
  Polynomial s = vr - y * ur;
  Polynomial n_tilde = ur * qr.r - s * qr.q;
  Polynomial numerator = out.c * n_tilde + n * ur;
  if (!numerator.divide_exact(qr.q, out.m)) throw PreconditionError("q divides c*ñ + n*u", "exact division failed");
  if (ir * ur != vr * out.c + out.m) throw Error("internal: i*u != v*c + m");
  return out;
}

DegenerateLift degenerate_lift(const Ideal& ideal, const GvdDecomposition& d, const Polynomial& g) {
  const RingPtr& ring = d.ring();
  Ideal I = ideal.in_ring(ring);
  const Polynomial y = y_variable(d);
  Polynomial gr = g.in_ring(ring);
  DegenerateLift out;
  if (d.degeneracy == Degeneracy::UnitLink) {
    const GvdPair* unit_pair = nullptr;
    for (const auto& pair : d.pairs) {
      if (pair.q.is_constant() && !pair.q.is_zero()) {
        unit_pair = &pair;
        break;
      }
    }
    if (!unit_pair) throw PreconditionError("basis element y + r", "no basis pair with a unit q-part");
    Coeff inv = ring->field().inv(unit_pair->q.leading_coeff());
    Polynomial ell = y + unit_pair->r.scale(inv);
    out.candidate = ell * gr;
  } else if (d.degeneracy == Degeneracy::EqualRadicals) {
    out.candidate = y * gr;
  } else {
    throw PreconditionError("degenerate decomposition", "decomposition is " + to_string(d.degeneracy));
  }
  SplittingCandidate cand(out.candidate);
  out.splits = is_splitting(cand);
  out.compatible = is_compatible_fedder(cand, I);
  return out;
}

LiftChecks validate_certificate(const LiftCertificate& cert) {
  LiftChecks checks;
  const RingPtr& ring = cert.fNew.ring();
  const std::size_t y = cert.d.y;
  Polynomial yv = Polynomial::variable(ring, y);
  Ideal I = cert.ideal.in_ring(ring);
  Ideal N = cert.d.deletion.in_ring(ring);
  Polynomial quotient_poly;
  checks.u_divides_g = cert.g.divide_exact(cert.u, quotient_poly);
  checks.v_in_ideal = contains(I, cert.v);
  checks.well_defined = contains(N, cert.u * (yv * cert.q + cert.r) - cert.v * cert.q);
  checks.initial_form = cert.fNew.initial_form(y) == yv * cert.g;
  checks.f_in_ideal = contains(I, cert.fNew);
  SplittingCandidate cand(cert.fNew);
  checks.splits = is_splitting(cand);
  checks.compatible = is_compatible_fedder(cand, I);
  return checks;
}

bool LiftChain::valid() const noexcept {
  if (levels.empty()) return false;
  for (const auto& level : levels) {
    if (!level.consistent) return false;
    for (const auto& cert : level.certificates) {
      if (!cert.valid()) return false;
    }
  }
  return true;
}

namespace {

void nodes_at_depth(const std::shared_ptr<const GvdTreeNode>& node, std::size_t depth, std::size_t target,
                    std::vector<std::shared_ptr<const GvdTreeNode>>& out) {
  if (!node) return;
  if (depth == target) {
    out.push_back(node);
    return;
  }
  nodes_at_depth(node->link, depth + 1, target, out);
  nodes_at_depth(node->deletion, depth + 1, target, out);
}

LiftCertificate degenerate_certificate(const Ideal& I, const GvdDecomposition& d, const Polynomial& g) {
  DegenerateLift lifted = degenerate_lift(I, d, g);
  LiftCertificate cert;
  cert.ideal = I;
  cert.d = d;
  cert.g = g;
  cert.u = Polynomial::constant(d.ring(), 1);
  cert.q = cert.u;
  lifted.candidate.divide_exact(g, cert.v);
  cert.r = cert.v - Polynomial::variable(d.ring(), d.y);
  cert.s = cert.r;
  cert.fNew = lifted.candidate;
  cert.checks.u_divides_g = true;
  cert.checks.v_in_ideal = true;
  cert.checks.well_defined = true;
  cert.checks.initial_form = cert.fNew.initial_form(d.y) == Polynomial::variable(d.ring(), d.y) * g;
  cert.checks.f_in_ideal = true;
  cert.checks.splits = lifted.splits;
  cert.checks.compatible = lifted.compatible;
  cert.assertions.push_back("degenerate decomposition (" + to_string(d.degeneracy) + ")");
  return cert;
}

}  // namespace

LiftChain lift_chain(const GvdTree& tree, const std::vector<std::string>& variables,
                     const std::vector<Polynomial>& schedule, const Polynomial& start, const LiftOptions& options) {
  if (schedule.size() != variables.size()) throw Error("lift chain needs one u per decomposed variable");
  const RingPtr& ring = start.ring();
  LiftChain chain;
  Polynomial current = start;
  for (std::size_t step = 0; step < variables.size(); ++step) {
    const std::size_t depth = variables.size() - 1 - step;
    const std::string& name = variables[depth];
    const std::size_t y = ring->index_of(name);
    Polynomial g;
    if (!current.divide_exact(Polynomial::variable(ring, y), g) || g.involves(y)) {
      throw PreconditionError("current splitting is y*g with g free of y", "at " + name);
    }
    LiftLevel level;
    level.variable = name;
    level.u = schedule[step].in_ring(ring);
    std::vector<std::shared_ptr<const GvdTreeNode>> nodes;
    nodes_at_depth(tree.root, 0, depth, nodes);
    for (const auto& node : nodes) {
      if (!node->decomposition) continue;
      Ideal I = node->ideal.in_ring(ring);
      GvdDecomposition d = decompose(I, y);
      LiftCertificate cert = d.degeneracy == Degeneracy::Nondegenerate ? lift_splitting(I, d, g, level.u, options)
                                                                       : degenerate_certificate(I, d, g);
      level.labels.push_back(node->label);
      level.certificates.push_back(std::move(cert));
    }
    if (level.certificates.empty()) throw Error("no internal tree node at depth " + std::to_string(depth));
    level.fNew = level.certificates.front().fNew;
    level.consistent = true;
    for (const auto& cert : level.certificates) level.consistent = level.consistent && cert.fNew == level.fNew;
    current = level.fNew;
    chain.levels.push_back(std::move(level));
  }
  chain.result = current;
  return chain;
}

}  // namespace fsplit
