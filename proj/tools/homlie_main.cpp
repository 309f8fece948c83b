// homlie command line: verify | construct | compute | check over JSON
// algebra documents. Exit codes: 0 = no violations, 1 = at least one
// identity violation reported, 2 = invalid input or precondition failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <homlie/homlie.hpp>

namespace {

using homlie::json;

struct Options {
  std::string report = "text";
  std::uint64_t seed = 0;
  int kmax = 2;
};

json conventions(const Options& opt) {
  return {
      {"insertion_sign", "eps(d, X_i) with X_i the degree sum of the arguments before slot i"},
      {"jacobi_prefix", "Y_i = degree sum of y_1..y_{i-1}, Y_1 = e"},
      {"centralizer_slot", "element constrained in the first slot"},
      {"default_twist_slot", 1},
      {"averaging_pairs", "all ordered slot pairs i != j"},
      {"module_axiom_d", "inner omega_{n-1} value inserted in slot i of omega_i"},
      {"alpha_commutation", "imposed on every unknown map in all solve kinds"},
      {"seed", opt.seed},
  };
}

json tuple_json(const homlie::IndexTuple& t) {
  json a = json::array();
  for (auto i : t) a.push_back(i + 1);
  return a;
}

json vec_json(const homlie::Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(homlie::rat_str(x));
  return a;
}

json witness_json(const homlie::TupleWitness& w) {
  return {{"tuple", tuple_json(w.tuple)}, {"lhs", vec_json(w.lhs)}, {"rhs", vec_json(w.rhs)},
          {"note", w.note}};
}

json check_json(const homlie::CheckReport& r) {
  json j;
  j["ok"] = r.ok;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

json grading_json(const homlie::GradingReport& r) {
  json v = json::array();
  for (const auto& g : r.violations) {
    json e;
    e["message"] = g.message;
    if (!g.tuple.empty()) e["tuple"] = tuple_json(g.tuple);
    v.push_back(std::move(e));
  }
  return {{"ok", r.ok()}, {"violations", std::move(v)}};
}

json jacobi_json(const homlie::JacobiReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back({{"x", tuple_json(viol.x)}, {"y", tuple_json(viol.y)},
                 {"residual", vec_json(viol.residual)}});
  return {{"ok", r.ok()}, {"violations", std::move(v)}};
}

json classification_json(const homlie::Classification& c) {
  return {{"multiplicative", c.multiplicative}, {"regular", c.regular}, {"involutive", c.involutive}};
}

/// Per-degree dimension table of a graded subspace.
json graded_dims_json(const homlie::GradedSubspace& s) {
  std::map<std::string, int> per;
  for (const auto& d : s.row_degrees) ++per[homlie::degree_str(d)];
  json j;
  j["dim"] = s.dim();
  j["per_degree"] = per;
  return j;
}

void print_text(const json& j, std::ostream& os, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << pad << it.key() << ":\n";
        print_text(it.value(), os, indent + 2);
      } else {
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object() || e.is_array()) {
        os << pad << "-\n";
        print_text(e, os, indent + 2);
      } else {
        os << pad << "- " << e.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const Options& opt, json& report) {
  if (opt.report == "json")
    std::cout << report.dump(2) << "\n";
  else
    print_text(report, std::cout);
}

int count_violations(const json& j) {
  int n = 0;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "ok" && it.value().is_boolean() && !it.value().get<bool>()) ++n;
      n += count_violations(it.value());
    }
  } else if (j.is_array()) {
    for (const auto& e : j) n += count_violations(e);
  }
  return n;
}

/// Full verification block: grading, structural skew, Hom-Jacobi,
/// classification. Classification is informational and never counts as a
/// violation; a non-multiplicative twist map does not invalidate the
/// algebra.
json verification_json(const homlie::HomColorAlgebra& a, const homlie::GradingReport& grading) {
  json j;
  j["bicharacter"] = {{"ok", true}};
  j["normalization"] = {{"ok", true}, {"note", "skew-symmetry is structural: constants live on canonical tuples"}};
  j["grading"] = grading_json(grading);
  const auto jac = homlie::check_hom_jacobi(a);
  j["hom_jacobi"] = jacobi_json(jac);
  const auto mult = homlie::check_multiplicative(a);
  json cls = classification_json(homlie::classify(a));
  if (!mult.ok && mult.witness) cls["multiplicative_witness"] = witness_json(*mult.witness);
  j["classification"] = {{"info", std::move(cls)}};
  return j;
}

int finish(const Options& opt, json& report) {
  const int v = count_violations(report);
  report["violations"] = v;
  emit(opt, report);
  return v > 0 ? 1 : 0;
}

int cmd_verify(const Options& opt, const std::string& path) {
  const auto loaded = homlie::load_algebra(path);
  json report;
  report["command"] = "verify";
  report["input"] = path;
  report["conventions"] = conventions(opt);
  report["dim"] = loaded.algebra.dim();
  report["arity"] = loaded.algebra.arity();
  report["checks"] = verification_json(loaded.algebra, loaded.grading);
  return finish(opt, report);
}

int cmd_construct(const Options& opt, const std::string& kind, const std::vector<std::string>& inputs,
                  const std::string& map_path, const std::vector<std::string>& xi_names,
                  std::uint32_t slot, std::uint32_t slot2, const std::string& out_path) {
  json report;
  report["command"] = "construct";
  report["kind"] = kind;
  report["conventions"] = conventions(opt);

  homlie::HomColorAlgebra result;
  if (kind == "twist") {
    if (inputs.size() != 1) throw homlie::input_error("construct twist needs one algebra document");
    const auto loaded = homlie::load_algebra(inputs[0]);
    if (map_path.empty()) throw homlie::input_error("construct twist needs --map");
    const auto beta = homlie::load_map(map_path, loaded.algebra.space.group, loaded.algebra.dim(),
                                       loaded.algebra.dim());
    auto tw = homlie::yau_twist(loaded.algebra, beta);
    report["morphism_check"] = check_json(tw.morphism);
    if (!tw.morphism.ok)
      report["morphism_check"]["note"] =
          "twist map is not an endomorphism: the twist construction theorem does not apply, so the "
          "verification verdict below stands on its own";
    result = std::move(tw.algebra);
  } else if (kind == "reduce") {
    if (inputs.size() != 1) throw homlie::input_error("construct reduce needs one algebra document");
    const auto loaded = homlie::load_algebra(inputs[0]);
    if (xi_names.empty()) throw homlie::input_error("construct reduce needs at least one --xi");
    std::vector<homlie::Vec> xis;
    for (const auto& name : xi_names) {
      const auto idx = loaded.algebra.space.index_of(name);
      if (!idx) throw homlie::input_error("unknown basis element '" + name + "'");
      xis.push_back(homlie::unit_vec(loaded.algebra.dim(), *idx));
    }
    result = homlie::reduce_by_elements(loaded.algebra, xis);
  } else if (kind == "tensor") {
    if (inputs.size() != 2)
      throw homlie::input_error("construct tensor needs a coefficient document and an algebra document");
    const auto A = homlie::load_commassoc(inputs[0]);
    const auto loaded = homlie::load_algebra(inputs[1]);
    result = homlie::tensor_product(A, loaded.algebra);
  } else if (kind == "semitwist") {
    if (inputs.size() != 1) throw homlie::input_error("construct semitwist needs one algebra document");
    const auto loaded = homlie::load_algebra(inputs[0]);
    if (map_path.empty()) throw homlie::input_error("construct semitwist needs --map");
    const auto beta = homlie::load_map(map_path, loaded.algebra.space.group, loaded.algebra.dim(),
                                       loaded.algebra.dim());
    result = homlie::semimorphism_twist(loaded.algebra, beta, slot);
  } else if (kind == "avgtwist") {
    if (inputs.size() != 1) throw homlie::input_error("construct avgtwist needs one algebra document");
    const auto loaded = homlie::load_algebra(inputs[0]);
    if (map_path.empty()) throw homlie::input_error("construct avgtwist needs --map");
    const auto beta = homlie::load_map(map_path, loaded.algebra.space.group, loaded.algebra.dim(),
                                       loaded.algebra.dim());
    result = slot2 == 0 ? homlie::averaging_twist_single(loaded.algebra, beta, slot)
                        : homlie::averaging_twist_double(loaded.algebra, beta, slot, slot2);
  } else {
    throw homlie::input_error("unknown construction kind '" + kind + "'");
  }

  if (out_path.empty()) throw homlie::input_error("construct needs --out");
  homlie::save_algebra(result, out_path);
  report["output"] = out_path;
  report["output_dim"] = result.dim();
  report["output_arity"] = result.arity();
  report["output_verification"] = verification_json(result, homlie::check_grading(result));
  return finish(opt, report);
}

int cmd_compute(const Options& opt, const std::string& kind, const std::string& path, int k,
                std::size_t depth, bool bases) {
  const auto loaded = homlie::load_algebra(path);
  const auto& alg = loaded.algebra;
  json report;
  report["command"] = "compute";
  report["kind"] = kind;
  report["input"] = path;
  report["conventions"] = conventions(opt);
  if (!loaded.grading.ok()) report["grading"] = grading_json(loaded.grading);

  auto subspace_json = [&](const homlie::GradedSubspace& s) {
    json j = graded_dims_json(s);
    if (bases) {
      json rows = json::array();
      for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(vec_json(s.part.basis().row(r)));
      j["basis"] = std::move(rows);
    }
    return j;
  };
  auto space_json = [&](const homlie::DegreeIndexedMapSpace& sp, bool joint) {
    json parts = json::array();
    for (const auto& p : sp.parts) {
      json e;
      e["degree"] = p.degree.coords;
      if (joint) {
        e["joint_dim"] = p.space.dim();
        e["projection_dim"] = homlie::project_map(p, alg.dim()).dim();
      } else {
        e["dim"] = p.space.dim();
      }
      if (bases) {
        json rows = json::array();
        for (std::size_t r = 0; r < p.space.dim(); ++r) rows.push_back(vec_json(p.space.basis().row(r)));
        e["basis"] = std::move(rows);
      }
      parts.push_back(std::move(e));
    }
    json j;
    j["k"] = sp.twist_power;
    j["per_degree"] = std::move(parts);
    return j;
  };

  if (kind == "center") {
    report["center"] = subspace_json(homlie::center(alg));
  } else if (kind == "derived" || kind == "lcs") {
    const auto seq = kind == "derived" ? homlie::derived_sequence(alg, depth)
                                       : homlie::descending_central_sequence(alg, depth);
    json dims = json::array();
    json terms = json::array();
    for (const auto& s : seq) {
      dims.push_back(s.dim());
      terms.push_back(subspace_json(s));
    }
    report["dims"] = std::move(dims);
    report["terms"] = std::move(terms);
  } else if (kind == "der") {
    report["space"] = space_json(homlie::compute_space(alg, k, homlie::MapKind::der), false);
  } else if (kind == "centroid") {
    report["space"] = space_json(homlie::compute_space(alg, k, homlie::MapKind::centroid), false);
  } else if (kind == "qcentroid") {
    report["space"] = space_json(homlie::compute_space(alg, k, homlie::MapKind::quasicentroid), false);
  } else if (kind == "zder") {
    report["space"] = space_json(homlie::compute_space(alg, k, homlie::MapKind::zder), false);
  } else if (kind == "qder") {
    report["space"] = space_json(homlie::compute_qder(alg, k), true);
  } else if (kind == "gder") {
    report["space"] = space_json(homlie::compute_gder(alg, k), true);
  } else {
    throw homlie::input_error("unknown compute kind '" + kind + "'");
  }
  return finish(opt, report);
}

int cmd_check(const Options& opt, const std::string& kind, const std::vector<std::string>& inputs,
              int k, const std::string& target, const std::string& twist_map) {
  if (inputs.empty()) throw homlie::input_error("check needs an algebra document");
  const auto loaded = homlie::load_algebra(inputs[0]);
  const auto& alg = loaded.algebra;
  json report;
  report["command"] = "check";
  report["kind"] = kind;
  report["input"] = inputs[0];
  report["conventions"] = conventions(opt);
  if (!loaded.grading.ok()) report["grading"] = grading_json(loaded.grading);

  auto need_map = [&]() {
    if (inputs.size() < 2) throw homlie::input_error("check " + kind + " needs a map document");
    return homlie::load_map(inputs[1], alg.space.group, alg.dim(), alg.dim());
  };

  if (kind == "morphism") {
    const auto f = need_map();
    if (target.empty()) {
      report["result"] = check_json(homlie::check_morphism(f, alg, alg));
    } else {
      const auto dst = homlie::load_algebra(target);
      const auto g = homlie::load_map(inputs[1], alg.space.group, dst.algebra.dim(), alg.dim());
      report["result"] = check_json(homlie::check_morphism(g, alg, dst.algebra));
    }
  } else if (kind == "semimorphism") {
    report["result"] = check_json(homlie::check_semi_morphism(alg, need_map()));
  } else if (kind == "averaging") {
    report["result"] = check_json(homlie::check_averaging(alg, need_map()));
  } else if (kind == "derivation") {
    report["k"] = k;
    report["result"] = check_json(homlie::check_alpha_k_derivation(alg, need_map(), k));
  } else if (kind == "module") {
    if (inputs.size() < 2 || inputs[1] != "self")
      throw homlie::input_error("check module supports the self-module: check module ALG self");
    auto acts = homlie::self_module_actions(alg);
    if (!twist_map.empty()) {
      const auto beta = homlie::load_map(twist_map, alg.space.group, alg.dim(), alg.dim());
      acts = homlie::twist_actions(alg, acts, beta);
      report["twisted_by"] = twist_map;
    }
    const auto rep = homlie::check_module(alg, homlie::self_module(alg), acts);
    json v = json::array();
    for (const auto& viol : rep.violations) {
      json e;
      e["axiom"] = std::string(1, viol.axiom);
      e["omega"] = viol.omega_index;
      if (!viol.args.empty()) e["args"] = tuple_json(viol.args);
      if (!viol.x.empty()) e["x"] = tuple_json(viol.x);
      if (!viol.y.empty()) e["y"] = tuple_json(viol.y);
      if (viol.axiom == 'c' || viol.axiom == 'd') e["m"] = viol.m + 1;
      e["residual"] = vec_json(viol.residual);
      v.push_back(std::move(e));
    }
    report["result"] = {{"ok", rep.ok()}, {"violations", std::move(v)}};
  } else {
    throw homlie::input_error("unknown check kind '" + kind + "'");
  }
  return finish(opt, report);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for n-Hom-Lie color algebras"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may appear after the subcommand

  Options opt;
  app.add_option("--report", opt.report, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed echoed into reports");
  app.add_option("--kmax", opt.kmax, "largest twist power for tower computations");

  auto* verify = app.add_subcommand("verify", "run all definitional checks on an algebra document");
  std::string verify_path;
  verify->add_option("algebra", verify_path, "algebra document")->required();

  auto* construct = app.add_subcommand("construct", "run a construction and save the result");
  std::string c_kind, c_map, c_out;
  std::vector<std::string> c_inputs, c_xi;
  std::uint32_t c_slot = 1, c_slot2 = 0;
  construct->add_option("kind", c_kind, "twist | reduce | tensor | semitwist | avgtwist")->required();
  construct->add_option("inputs", c_inputs, "input documents");
  construct->add_option("--map", c_map, "map document");
  construct->add_option("--xi", c_xi, "basis element fixed by the reduction (repeatable)");
  construct->add_option("--slot", c_slot, "insertion slot (1-based)");
  construct->add_option("--slot2", c_slot2, "second insertion slot for avgtwist");
  construct->add_option("--out", c_out, "output path")->required();

  auto* compute = app.add_subcommand("compute", "structural and derivation-type invariants");
  std::string m_kind, m_path;
  int m_k = 0;
  std::size_t m_depth = 16;
  bool m_bases = false;
  compute->add_option("kind", m_kind,
                      "center | derived | lcs | der | qder | gder | centroid | qcentroid | zder")
      ->required();
  compute->add_option("algebra", m_path, "algebra document")->required();
  compute->add_option("--k", m_k, "twist power (-1 allowed for regular algebras)");
  compute->add_option("--depth", m_depth, "maximum sequence depth");
  compute->add_flag("--bases", m_bases, "include basis vectors in the report");

  auto* check = app.add_subcommand("check", "predicate checks for maps and modules");
  std::string k_kind, k_target, k_twist;
  std::vector<std::string> k_inputs;
  int k_k = 0;
  check->add_option("kind", k_kind, "morphism | semimorphism | averaging | derivation | module")
      ->required();
  check->add_option("inputs", k_inputs, "algebra document, then map document or 'self'");
  check->add_option("--k", k_k, "twist power for derivation checks");
  check->add_option("--target", k_target, "target algebra for morphism checks");
  check->add_option("--twist-by", k_twist, "twist the self-module actions by this endomorphism");

  try {
    app.parse(argc, argv);
    if (*verify) return cmd_verify(opt, verify_path);
    if (*construct) return cmd_construct(opt, c_kind, c_inputs, c_map, c_xi, c_slot, c_slot2, c_out);
    if (*compute) return cmd_compute(opt, m_kind, m_path, m_k, m_depth, m_bases);
    if (*check) return cmd_check(opt, k_kind, k_inputs, k_k, k_target, k_twist);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const homlie::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
