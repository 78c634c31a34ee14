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


#include "fsplit/gvd.hpp"

#include <functional>
#include <future>

#include "fsplit/errors.hpp"

namespace fsplit {

std::string to_string(Condition2 c) {
  switch (c) {
    case Condition2::Holds:
      return "holds";
    case Condition2::HoldsByDegenerateEquality:
      return "holds-by-degenerate-equality";
    case Condition2::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::UnitLink:
      return "degenerate-unit-link";
    case Degeneracy::EqualRadicals:
      return "degenerate-equal-radicals";
    case Degeneracy::Nondegenerate:
      return "nondegenerate";
    case Degeneracy::NotAGvd:
      return "not-a-gvd";
  }
  return "not-a-gvd";
}

GvdDecomposition decompose(const Ideal& ideal, std::size_t y) {
  const RingPtr& ring = ideal.ring();
  if (y >= ring->num_variables()) throw Error("variable index out of range");
  if (ideal.is_unit()) throw PreconditionError("I proper", "cannot decompose the unit ideal");

  GvdDecomposition d;
  d.y = y;
  d.ideal = ideal;
  auto gb = ideal.groebner(ring->order().with_variable_first(y));
  std::vector<Polynomial> initial;
  bool high_degree = false;
  for (const auto& element : gb->elements()) {
    Polynomial g = element.in_ring(ring);
    Exponent deg = g.degree_in(y);
    initial.push_back(g.initial_form(y));
    if (deg == 0) {
      d.hPart.push_back(g);
    } else if (deg == 1) {
      d.pairs.push_back({g.coefficient_in(y, 1), g.coefficient_in(y, 0)});
    } else {
      high_degree = true;
    }
  }
  d.inY = Ideal(ring, std::move(initial));
  d.deletion = Ideal(ring, d.hPart);
  Polynomial yv = Polynomial::variable(ring, y);
  if (high_degree) {
    d.link = saturate(d.inY, yv);
  } else {
    std::vector<Polynomial> link = d.hPart;
    for (const auto& pair : d.pairs) link.push_back(pair.q);
    d.link = Ideal(ring, std::move(link));
  }
  d.condition1 = equals(d.inY, intersect(d.link, sum(d.deletion, Ideal(ring, {yv}))));
  if (d.condition1) {
    d.degeneracy = classify_degeneracy(d);
    d.condition2 = check_condition2(d);
  }
  return d;
}

GvdDecomposition decompose(const Ideal& ideal, const std::string& y) {
  return decompose(ideal, ideal.ring()->index_of(y));
}

Degeneracy classify_degeneracy(const GvdDecomposition& d) {
  if (!d.condition1) return Degeneracy::NotAGvd;
  if (d.link.is_unit()) return Degeneracy::UnitLink;
  for (const auto& g : d.link.generators()) {
    if (!radical_member(g, d.deletion)) return Degeneracy::Nondegenerate;
  }
  return Degeneracy::EqualRadicals;
}

Condition2 check_condition2(const GvdDecomposition& d) {
  const Ideal& c = d.link;
  const Ideal& n = d.deletion;
  if (equals(quotient(n, c), n)) return Condition2::Holds;
  if (classify_degeneracy(d) == Degeneracy::EqualRadicals) return Condition2::HoldsByDegenerateEquality;
  // Components of V(N) lying inside V(C).
  Ideal supported = saturate(n, saturate(n, c));
  if (supported.is_unit()) return Condition2::Holds;
  if (c.is_unit()) return Condition2::Inconclusive;
  return dimension(supported) < dimension(c) ? Condition2::Holds : Condition2::Inconclusive;
}

bool is_variable_generated(const Ideal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return false;
  for (const auto& g : ideal.groebner()->elements()) {
    if (!g.is_monomial() || g.leading_monomial().degree() != 1) return false;
  }
  return true;
}

namespace {

std::string compose(const std::string& op, const std::string& parent) {
  return parent == "I" ? op : op + " ∘ " + parent;
}

void grow(const std::shared_ptr<GvdTreeNode>& node, const std::vector<std::string>& variables, std::size_t depth,
          bool parallel, bool& lex_compatible, std::mutex& flag_mutex) {
  const Ideal& ideal = node->ideal;
  if (ideal.is_unit()) {
    node->stop_reason = "unit";
    return;
  }
  if (ideal.is_zero()) {
    node->stop_reason = "zero";
    return;
  }
  if (is_variable_generated(ideal)) {
    node->stop_reason = "variables";
    return;
  }
  if (depth == variables.size()) {
    node->stop_reason = "exhausted";
    return;
  }
  const std::string& name = variables[depth];
  auto d = std::make_shared<GvdDecomposition>(decompose(ideal, name));
  node->decomposition = d;
  if (!d->condition1) {
    node->stop_reason = "not-gvd";
    std::lock_guard lock(flag_mutex);
    lex_compatible = false;
    return;
  }
  RingPtr contracted = ideal.ring()->without({name});
  node->link = std::make_shared<GvdTreeNode>();
  node->link->label = compose("lk_" + name, node->label);
  node->link->ideal = d->link.in_ring(contracted);
  node->deletion = std::make_shared<GvdTreeNode>();
  node->deletion->label = compose("del_" + name, node->label);
  node->deletion->ideal = d->deletion.in_ring(contracted);
  if (parallel) {
    auto pending = std::async(std::launch::async, grow, node->link, std::cref(variables), depth + 1, parallel,
                              std::ref(lex_compatible), std::ref(flag_mutex));
    grow(node->deletion, variables, depth + 1, parallel, lex_compatible, flag_mutex);
    pending.get();
  } else {
    grow(node->link, variables, depth + 1, parallel, lex_compatible, flag_mutex);
    grow(node->deletion, variables, depth + 1, parallel, lex_compatible, flag_mutex);
  }
}

void collect(const std::shared_ptr<const GvdTreeNode>& node, std::vector<std::shared_ptr<const GvdTreeNode>>& out,
             bool leaves_only) {
  if (!node) return;
  if (!leaves_only || node->is_leaf()) out.push_back(node);
  collect(node->link, out, leaves_only);
  collect(node->deletion, out, leaves_only);
}

}  // namespace

std::vector<std::shared_ptr<const GvdTreeNode>> GvdTree::leaves() const {
  std::vector<std::shared_ptr<const GvdTreeNode>> out;
  collect(root, out, true);
  return out;
}

std::vector<std::shared_ptr<const GvdTreeNode>> GvdTree::nodes() const {
  std::vector<std::shared_ptr<const GvdTreeNode>> out;
  collect(root, out, false);
  return out;
}

std::shared_ptr<const GvdTreeNode> GvdTree::find(const std::string& label) const {
  for (const auto& node : nodes()) {
    if (node->label == label) return node;
  }
  return nullptr;
}

GvdTree lex_gvd_tree(const Ideal& ideal, const std::vector<std::string>& variables, bool parallel) {
  for (const auto& v : variables) ideal.ring()->index_of(v);
  GvdTree tree;
  tree.root = std::make_shared<GvdTreeNode>();
  tree.root->label = "I";
  tree.root->ideal = ideal;
  std::mutex flag_mutex;
  grow(tree.root, variables, 0, parallel, tree.lex_compatible, flag_mutex);
  return tree;
}

}  // namespace fsplit
