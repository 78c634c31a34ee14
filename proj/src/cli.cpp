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


#include "fsplit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fsplit/errors.hpp"
#include "fsplit/session.hpp"

namespace fsplit {

using nlohmann::json;

namespace {

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

}  // namespace

json ideal_json(const Ideal& ideal) { return strings(ideal.groebner()->elements()); }

json decomposition_json(const GvdDecomposition& d) {
  json pairs = json::array();
  for (const auto& pair : d.pairs) pairs.push_back({{"q", pair.q.to_string()}, {"r", pair.r.to_string()}});
  return {{"variable", d.variable()},
          {"inY", ideal_json(d.inY)},
          {"link", ideal_json(d.link)},
          {"deletion", ideal_json(d.deletion)},
          {"pairs", pairs},
          {"hPart", strings(d.hPart)},
          {"condition1", d.condition1},
          {"condition2", to_string(d.condition2)},
          {"degeneracy", to_string(d.degeneracy)}};
}

namespace {

json node_json(const GvdTreeNode& node) {
  json out = {{"label", node.label}, {"ideal", ideal_json(node.ideal)},
              {"variables", node.ideal.ring()->variables()}};
  if (node.decomposition) out["decomposition"] = decomposition_json(*node.decomposition);
  if (!node.stop_reason.empty()) out["stop"] = node.stop_reason;
  if (node.link) out["link"] = node_json(*node.link);
  if (node.deletion) out["deletion"] = node_json(*node.deletion);
  return out;
}

}  // namespace

json tree_json(const GvdTree& tree) {
  json leaves = json::array();
  for (const auto& leaf : tree.leaves()) leaves.push_back({{"label", leaf->label}, {"ideal", ideal_json(leaf->ideal)}});
  return {{"lex_compatible", tree.lex_compatible},
          {"asserted_unmixed", tree.asserted_unmixed},
          {"root", node_json(*tree.root)},
          {"leaves", leaves}};
}

json certificate_json(const LiftCertificate& cert) {
  const LiftChecks& c = cert.checks;
  return {{"ideal", ideal_json(cert.ideal)},
          {"decomposition", decomposition_json(cert.d)},
          {"g", cert.g.to_string()},
          {"u", cert.u.to_string()},
          {"q", cert.q.to_string()},
          {"r", cert.r.to_string()},
          {"s", cert.s.to_string()},
          {"v", cert.v.to_string()},
          {"fNew", cert.fNew.to_string()},
          {"checks",
           {{"u_divides_g", c.u_divides_g},
            {"v_in_ideal", c.v_in_ideal},
            {"well_defined", c.well_defined},
            {"initial_form", c.initial_form},
            {"f_in_ideal", c.f_in_ideal},
            {"splits", c.splits},
            {"compatible", c.compatible}}},
          {"assertions", cert.assertions},
          {"heuristic", cert.heuristic},
          {"valid", cert.valid()}};
}

json chain_json(const LiftChain& chain) {
  json levels = json::array();
  for (const auto& level : chain.levels) {
    json certs = json::array();
    for (std::size_t i = 0; i < level.certificates.size(); ++i) {
      json c = certificate_json(level.certificates[i]);
      c["node"] = level.labels[i];
      certs.push_back(std::move(c));
    }
    levels.push_back({{"variable", level.variable},
                      {"u", level.u.to_string()},
                      {"fNew", level.fNew.to_string()},
                      {"consistent", level.consistent},
                      {"certificates", certs}});
  }
  return {{"levels", levels}, {"result", chain.result.to_string()}, {"valid", chain.valid()}};
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << "\n"; }

void progress(Context& ctx, const std::string& message) { ctx.err << "[fsplit] " << message << std::endl; }

// Options shared by verbs that read a session file.
struct SessionArgs {
  std::string path;
  std::string ideal;

  Session load() const { return parse_session(read_file(path)); }
  const Ideal& pick(const Session& s) const {
    if (!ideal.empty()) return s.ideal(ideal);
    if (s.ideal_names.size() == 1) return s.ideal(s.ideal_names.front());
    throw Error("--ideal is required when the session declares " + std::to_string(s.ideal_names.size()) + " ideals");
  }
};

void add_session(CLI::App* cmd, SessionArgs& args, bool with_ideal = true) {
  cmd->add_option("--session", args.path, "Session file")->required();
  if (with_ideal) cmd->add_option("--ideal", args.ideal, "Name of an ideal in the session");
}

int verdict(bool ok) { return ok ? kVerified : kVerifiedNegative; }

json candidate_report(const SplittingCandidate& cand, const Ideal& ideal) {
  SplittingStatus status = check_splitting(cand);
  CompatibilityResult compat = fedder_check(cand, ideal);
  json out = {{"candidate", cand.polynomial().to_string()},
              {"splits", status.verified},
              {"trace", status.trace_value.to_string()},
              {"compatible", compat.verified},
              {"witnesses", compat.witnesses}};
  if (status.scale) out["scale"] = *status.scale;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Frobenius splittings, compatibly split ideals and geometric vertex decomposition over F_p",
               "fsplit"};
  app.require_subcommand(1);
  std::function<int()> action;

  SessionArgs session;
  std::string order, poly, other, var, vars, g_text, u_text, start, method = "fedder", graph_path;
  unsigned p = 2;
  std::size_t n = 2, big_n = 2, r = 2;

  auto* gb = app.add_subcommand("gb", "Reduced Gröbner basis");
  add_session(gb, session);
  gb->add_option("--order", order, "lex or grevlex (default: the session order)");
  gb->callback([&] {
    action = [&] {
      Session s = session.load();
      const Ideal& I = session.pick(s);
      Ideal target = I;
      if (!order.empty()) {
        if (order != "lex" && order != "grevlex") throw Error("unknown order " + order);
        auto priority = s.ring->order().priority();
        target = I.in_ring(s.ring->with_order(order == "lex" ? TermOrder::lex(priority) : TermOrder::grevlex(priority)));
      }
      emit(ctx, {{"basis", ideal_json(target)}, {"order", order.empty() ? s.ring->order().key() : order}});
      return int{kVerified};
    };
  });

  auto* nf = app.add_subcommand("nf", "Normal form modulo an ideal");
  add_session(nf, session);
  nf->add_option("--f", poly, "Polynomial")->required();
  nf->callback([&] {
    action = [&] {
      Session s = session.load();
      const Ideal& I = session.pick(s);
      Polynomial h = normal_form(s.polynomial(poly), *I.groebner());
      emit(ctx, {{"normal_form", h.to_string()}, {"member", h.is_zero()}});
      return int{kVerified};
    };
  });

  auto binary = [&](const std::string& name, const std::string& help,
                    std::function<Ideal(const Ideal&, const Session&)> op) {
    auto* cmd = app.add_subcommand(name, help);
    add_session(cmd, session);
    cmd->add_option("--by", other, "Second ideal (by name)");
    cmd->add_option("--f", poly, "Polynomial instead of a second ideal");
    cmd->callback([&, op] {
      action = [&, op] {
        Session s = session.load();
        Ideal result = op(session.pick(s), s);
        emit(ctx, {{"generators", ideal_json(result)}});
        return int{kVerified};
      };
    });
  };
  auto second = [&](const Session& s) -> Ideal {
    if (!other.empty()) return s.ideal(other);
    if (!poly.empty()) return Ideal(s.ring, {s.polynomial(poly)});
    throw Error("give --by IDEAL or --f POLY");
  };
  binary("quot", "Ideal quotient I : J", [&](const Ideal& I, const Session& s) { return quotient(I, second(s)); });
  binary("sat", "Saturation I : J^inf", [&](const Ideal& I, const Session& s) { return saturate(I, second(s)); });
  binary("intersect", "Intersection of two ideals",
         [&](const Ideal& I, const Session& s) { return intersect(I, second(s)); });

  auto* iny = app.add_subcommand("iny", "Initial ideal in_y(I)");
  add_session(iny, session);
  iny->add_option("--var", var, "Variable y")->required();
  iny->callback([&] {
    action = [&] {
      Session s = session.load();
      emit(ctx, {{"inY", ideal_json(initial_ideal(session.pick(s), s.ring->index_of(var)))}});
      return int{kVerified};
    };
  });

  auto* gvd = app.add_subcommand("gvd", "Geometric vertex decomposition at one variable");
  add_session(gvd, session);
  gvd->add_option("--var", var, "Variable y")->required();
  gvd->callback([&] {
    action = [&] {
      Session s = session.load();
      GvdDecomposition d = decompose(session.pick(s), var);
      emit(ctx, decomposition_json(d));
      return verdict(d.condition1);
    };
  });

  auto* tree = app.add_subcommand("gvd-tree", "Lex-compatible decomposition tree");
  add_session(tree, session);
  tree->add_option("--vars", vars, "Comma-separated variables, decomposed in order")->required();
  tree->callback([&] {
    action = [&] {
      Session s = session.load();
      GvdTree t = lex_gvd_tree(session.pick(s), split(vars, ','));
      emit(ctx, tree_json(t));
      return verdict(t.lex_compatible);
    };
  });

  auto* split_check = app.add_subcommand("split-check", "Is Tr(f^(p-1) -) a splitting?");
  add_session(split_check, session, false);
  split_check->add_option("--f", poly, "Candidate f")->required();
  split_check->callback([&] {
    action = [&] {
      Session s = session.load();
      SplittingStatus status = check_splitting(SplittingCandidate(s.polynomial(poly)));
      json j = {{"candidate", s.polynomial(poly).to_string()},
                {"verified", status.verified},
                {"trace", status.trace_value.to_string()}};
      if (status.scale) j["scale"] = *status.scale;
      emit(ctx, j);
      return verdict(status.verified);
    };
  });

  auto* compat = app.add_subcommand("compat-check", "Does Tr(f^(p-1) -) map I into I?");
  add_session(compat, session);
  compat->add_option("--f", poly, "Candidate f")->required();
  compat->add_option("--method", method, "fedder or bruteforce")->check(CLI::IsMember({"fedder", "bruteforce"}));
  compat->callback([&] {
    action = [&] {
      Session s = session.load();
      SplittingCandidate cand(s.polynomial(poly));
      const Ideal& I = session.pick(s);
      CompatibilityResult res = method == "fedder" ? fedder_check(cand, I) : bruteforce_check(cand, I);
      emit(ctx, {{"candidate", cand.polynomial().to_string()},
                 {"verified", res.verified},
                 {"method", res.method},
                 {"witnesses", res.witnesses}});
      return verdict(res.verified);
    };
  });

  auto* lift = app.add_subcommand("lift", "Lift y*g to a splitting compatible with I");
  add_session(lift, session);
  lift->add_option("--var", var, "Decomposition variable y")->required();
  lift->add_option("--g", g_text, "y-free cofactor g")->required();
  lift->add_option("--u", u_text, "Factor u of g in the link")->required();
  lift->callback([&] {
    action = [&] {
      Session s = session.load();
      const Ideal& I = session.pick(s);
      progress(ctx, "decomposing at " + var);
      GvdDecomposition d = decompose(I, var);
      LiftCertificate cert = lift_splitting(I, d, s.polynomial(g_text), s.polynomial(u_text));
      emit(ctx, certificate_json(cert));
      return verdict(cert.valid());
    };
  });

  auto* chain = app.add_subcommand("lift-chain", "Lift a splitting up a gvd tree");
  add_session(chain, session);
  chain->add_option("--vars", vars, "Comma-separated decomposition variables, top first")->required();
  chain->add_option("--u", u_text, "Semicolon-separated u's, deepest level first")->required();
  chain->add_option("--start", start, "Splitting at the leaves (default: product of all variables)");
  chain->callback([&] {
    action = [&] {
      Session s = session.load();
      const Ideal& I = session.pick(s);
      std::vector<std::string> names = split(vars, ',');
      std::vector<Polynomial> schedule;
      for (const auto& u : split(u_text, ';')) schedule.push_back(s.polynomial(u));
      progress(ctx, "building the decomposition tree");
      GvdTree t = lex_gvd_tree(I, names);
      Polynomial f0 = start.empty() ? standard_splitting(s.ring) : s.polynomial(start);
      progress(ctx, "lifting");
      LiftChain c = lift_chain(t, names, schedule, f0);
      emit(ctx, chain_json(c));
      return verdict(c.valid());
    };
  });

  auto* toric = app.add_subcommand("toric", "Toric ideal of a graph");
  toric->add_option("--graph", graph_path, "Edge list file: one `name u v` per line")->required();
  toric->add_option("--p", p, "Characteristic")->required();
  toric->callback([&] {
    action = [&] {
      Graph graph = Graph::parse(read_file(graph_path));
      Ideal I = graph_toric_ideal(graph, p);
      emit(ctx, {{"variables", I.ring()->variables()}, {"generators", ideal_json(I)}});
      return int{kVerified};
    };
  });

  auto* repro = app.add_subcommand("repro", "Reproduce a worked example");
  repro->require_subcommand(1);

  auto* two_row = repro->add_subcommand("prop41", "Splitting of the 2 x n maximal minors");
  two_row->add_option("--n", n)->required();
  two_row->add_option("--N", big_n)->required();
  two_row->add_option("--p", p)->required();
  two_row->callback([&] {
    action = [&] {
      RingPtr ring = two_row_ring(p, big_n);
      Ideal I = two_row_minors(ring, n);
      SplittingCandidate cand = two_row_splitting(ring, n);
      json j = candidate_report(cand, I);
      progress(ctx, "running the lift pipeline");
      TwoRowPipeline pipe = two_row_lift_pipeline(ring, n);
      json certs = json::array();
      bool valid = true;
      for (const auto& cert : pipe.certificates) {
        certs.push_back(certificate_json(cert));
        valid = valid && cert.valid();
      }
      j["ideal"] = ideal_json(I);
      j["certificates"] = certs;
      j["lift_matches"] = pipe.result == cand.polynomial();
      bool ok = j["splits"] && j["compatible"] && j["lift_matches"] && valid;
      j["verified"] = ok;
      emit(ctx, j);
      return verdict(ok);
    };
  });

  auto* ex42 = repro->add_subcommand("ex42", "Toric ideal of the 9-vertex graph and its lift chain");
  ex42->add_option("--p", p)->required();
  ex42->callback([&] {
    action = [&] {
      progress(ctx, "computing the toric ideal");
      Ideal I = graph_toric_ideal(example_graph(), p);
      const RingPtr& ring = I.ring();
      std::vector<std::string> names{"e1", "e2", "e3"};
      progress(ctx, "building the decomposition tree");
      GvdTree t = lex_gvd_tree(I, names);
      std::vector<Polynomial> schedule{Polynomial::variable(ring, "e11"), parse_polynomial(ring, "e7*e9"),
                                       parse_polynomial(ring, "e5*e8")};
      progress(ctx, "lifting");
      LiftChain c = lift_chain(t, names, schedule, standard_splitting(ring));
      std::vector<Polynomial> expected = example_graph_splittings(ring);
      bool matches = c.levels.size() == expected.size();
      for (std::size_t i = 0; matches && i < expected.size(); ++i) matches = c.levels[i].fNew == expected[i];
      json j = candidate_report(SplittingCandidate(c.result), I);
      j["ideal"] = ideal_json(I);
      j["tree"] = tree_json(t);
      j["chain"] = chain_json(c);
      j["matches_expected"] = matches;
      bool ok = matches && c.valid() && j["splits"] && j["compatible"];
      j["verified"] = ok;
      emit(ctx, j);
      return verdict(ok);
    };
  });

  auto* ddv = repro->add_subcommand("ddv", "Double determinantal splitting for maximal minors");
  ddv->add_option("--n", n)->required();
  ddv->add_option("--r", r)->required();
  ddv->add_option("--p", p)->required();
  ddv->callback([&] {
    action = [&] {
      DoubleDetInstance inst = double_det_instance(p, n, n, r, n, n);
      SplittingCandidate cand = double_det_splitting(inst);
      progress(ctx, "checking compatibility with I_n(H) + I_n(V)");
      json j = candidate_report(cand, inst.ideal());
      json js = json::array();
      bool ok = j["splits"] && j["compatible"];
      for (std::size_t i = 1; i + 2 <= r; ++i) {
        auto gens = inst.j_generators(i);
        std::size_t codim = inst.ring->num_variables() - dimension(Ideal(inst.ring, gens));
        bool coprime = pairwise_coprime_leading_terms(gens);
        js.push_back({{"i", i}, {"coprime_leading_terms", coprime}, {"codimension", codim}});
        ok = ok && coprime && codim == 2 * n + 1;
      }
      j["J"] = js;
      j["factor_count"] = double_det_factors(inst).size();
      j["verified"] = ok;
      emit(ctx, j);
      return verdict(ok);
    };
  });

  auto* ex33 = repro->add_subcommand("ex33", "A lift whose hypothesis fails and whose candidate does not split I");
  ex33->add_option("--p", p)->required();
  ex33->callback([&] {
    action = [&] {
      Ideal I = non_f_split_ideal(p);
      const RingPtr& ring = I.ring();
      GvdDecomposition d = decompose(I, "y");
      SplittingCandidate standard(standard_splitting(ring));
      json j = {{"ideal", ideal_json(I)},
                {"decomposition", decomposition_json(d)},
                {"standard_splits_link", is_compatible_fedder(standard, d.link)},
                {"standard_splits_deletion", is_compatible_fedder(standard, d.deletion)}};
      bool negative = true;
      json cands = json::array();
      for (const char* text : {"z*(y*x - s^2)*r*s", "z*(y*x - s^2)*y*r*s"}) {
        json c = candidate_report(SplittingCandidate(parse_polynomial(ring, text)), I);
        negative = negative && !(c["splits"] && c["compatible"]);
        cands.push_back(c);
      }
      j["candidates"] = cands;
      try {
        lift_splitting(I, d, parse_polynomial(ring, "x*z*r*s"), parse_polynomial(ring, "z*x"));
        j["lift"] = "constructed";
        negative = false;
      } catch (const PreconditionError& e) {
        j["lift"] = {{"error", "precondition"}, {"hypothesis", e.hypothesis()}, {"message", e.what()}};
      }
      j["verified_negative"] = negative;
      emit(ctx, j);
      return negative ? int{kVerifiedNegative} : int{kVerified};
    };
  });

  auto* ex54 = repro->add_subcommand("ex54", "Heuristic lift on a ladder double determinantal ideal");
  ex54->add_option("--p", p)->required();
  ex54->callback([&] {
    action = [&] {
      LadderExample ex = ladder_example(p);
      GvdDecomposition d = decompose(ex.ideal, "z12");
      Polynomial g;
      ex.f.divide_exact(Polynomial::variable(ex.ring, "z12"), g);
      LiftCertificate cert = split_sum_lift(ex.ideal, d, g, ex.delta, ex.decomposition);
      emit(ctx, certificate_json(cert));
      return verdict(cert.valid());
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? int{kVerified} : int{kError};
  }
  try {
    return action();
  } catch (const PreconditionError& e) {
    emit(ctx, {{"error", {{"kind", "precondition"}, {"hypothesis", e.hypothesis()}, {"message", e.what()}}}});
    return kVerifiedNegative;
  } catch (const ParseError& e) {
    emit(ctx, {{"error", {{"kind", "parse"}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}}}});
  } catch (const std::exception& e) {
    emit(ctx, {{"error", {{"kind", "error"}, {"message", e.what()}}}});
  }
  err << "fsplit: error\n";
  return kError;
}

}  // namespace fsplit
