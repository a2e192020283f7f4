#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ofc/coloring.hpp"
#include "ofc/cycles.hpp"
#include "ofc/graph.hpp"
#include "ofc/io.hpp"
#include "ofc/kneser.hpp"
#include "ofc/random.hpp"
#include "ofc/reproduce.hpp"
#include "ofc/solver.hpp"
#include "ofc/targets.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace ofc;

enum ExitCode : int { kOk = 0, kFailed = 1, kInconclusive = 2, kUsage = 64 };

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::exists: return kOk;
    case Outcome::not_exists: return kFailed;
    case Outcome::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + render(e);
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, e] : v.items()) s += (s.empty() ? "" : ", ") + k + "=" + render(e);
    return s;
  }
  return v.dump();
}

// Ordered key/value report plus the run manifest.
class Report {
 public:
  void set(const std::string& key, Json value) { fields_[key] = std::move(value); }

  std::string load(const std::string& path) {
    std::string text = read_text_file(path);
    inputs_[path] = content_digest(text);
    return text;
  }

  void artifact(std::string text) { artifact_ = std::move(text); }
  void seed(std::uint64_t s) { seed_ = s; }

  void print(std::ostream& os, bool json, const std::string& command, const std::string& out_path) {
    if (artifact_ && !out_path.empty()) {
      write_text_file(out_path, *artifact_);
      set("written", out_path);
    }
    if (json) {
      Json doc = fields_;
      if (artifact_ && out_path.empty()) doc["artifact"] = *artifact_;
      Json manifest{{"command", command}, {"inputs", inputs_}};
      if (seed_) manifest["seed"] = *seed_;
      doc["manifest"] = std::move(manifest);
      os << doc.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : fields_.items()) os << k << ": " << render(v) << '\n';
    os << "command: " << command << '\n';
    for (const auto& [path, digest] : inputs_.items()) os << "input " << path << ": " << render(digest) << '\n';
    if (seed_) os << "seed: " << *seed_ << '\n';
    if (artifact_ && out_path.empty()) os << '\n' << *artifact_;
  }

 private:
  Json fields_ = Json::object();
  Json inputs_ = Json::object();
  std::optional<std::string> artifact_;
  std::optional<std::uint64_t> seed_;
};

struct Args {
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> time_limit;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  bool json = false;

  std::string graph, coloring, from, to, sub;
  int b = 1, k = 1, b_max = 2, r = 0, l = 0, factor = 2;
  std::string eps;

  SearchBudget budget() const {
    SearchBudget s;
    if (budget_nodes) s.max_nodes = *budget_nodes;
    if (time_limit) s.time_limit = std::chrono::duration<double>(*time_limit);
    return s;
  }
};

OrientedGraph load_graph(Report& rep, const std::string& path) {
  return parse_digraph(rep.load(path), path).graph;
}

BFoldColoring load_coloring(Report& rep, const std::string& path) {
  return parse_coloring(rep.load(path), path);
}

Json probe_list(const std::vector<Probe>& probes) {
  Json list = Json::array();
  for (const auto& p : probes) {
    list.push_back("b=" + std::to_string(p.fold) + " k=" + std::to_string(p.palette) + " " + to_string(p.outcome));
  }
  return list;
}

Json color_sets(const std::vector<ColorSet>& sets) {
  Json list = Json::array();
  for (ColorSet s : sets) list.push_back(brace(s));
  return list;
}

std::string outcome_text(Outcome o) {
  return o == Outcome::not_exists ? "not-exists (exhaustive)" : to_string(o);
}

int cmd_verify(const Args& a, Report& rep) {
  const auto g = load_graph(rep, a.graph);
  const auto c = load_coloring(rep, a.coloring);
  try {
    check_well_formed(g, c);
  } catch (const std::invalid_argument& e) {
    rep.set("result", "invalid");
    rep.set("reason", e.what());
    return kFailed;
  }
  if (const auto v = verify_coloring(g, c)) {
    rep.set("result", "invalid");
    rep.set("violation", v->describe(c));
    return kFailed;
  }
  rep.set("result", "valid, ratio " + to_string(ratio(c)));
  rep.set("ratio", to_string(ratio(c)));
  return kOk;
}

int cmd_bfold(const Args& a, Report& rep) {
  const auto g = load_graph(rep, a.graph);
  const auto r = exists_bfold(g, a.b, a.k, a.budget());
  rep.set("result", outcome_text(r.outcome));
  if (r.outcome == Outcome::not_exists) rep.set("proof", r.by_counting ? "n*b > k*alpha_o" : "search");
  rep.set("nodes", r.nodes);
  if (r.certificate) {
    rep.set("ratio", to_string(ratio(*r.certificate)));
    rep.artifact(format_coloring(*r.certificate));
  }
  return exit_for(r.outcome);
}

int cmd_chi(const Args& a, Report& rep, int fold) {
  const auto g = load_graph(rep, a.graph);
  const auto r = chi_b(g, fold, a.budget());
  rep.set("result", to_string(r.outcome));
  if (r.outcome == Outcome::exists) {
    rep.set("value", r.value);
  } else {
    rep.set("stuck at", r.value);
  }
  rep.set("probes", probe_list(r.probes));
  if (r.certificate) rep.artifact(format_coloring(*r.certificate));
  return r.outcome == Outcome::exists ? kOk : kInconclusive;
}

int cmd_hom(const Args& a, Report& rep) {
  const auto from = load_graph(rep, a.from);
  const auto to = load_graph(rep, a.to);
  const auto r = hom_exists(from, to, a.budget());
  rep.set("result", outcome_text(r.outcome));
  rep.set("nodes", r.nodes);
  if (r.map) {
    Json map = Json::array();
    for (std::size_t v = 0; v < r.map->size(); ++v) map.push_back(std::to_string(v) + "->" + std::to_string((*r.map)[v]));
    rep.set("map", map);
  }
  return exit_for(r.outcome);
}

int cmd_sweep(const Args& a, Report& rep) {
  const auto g = load_graph(rep, a.graph);
  const auto r = bound_sweep(g, a.b_max, a.budget(), a.graph);
  rep.set("graph", r.graph_id);
  rep.set("omega_ro", r.omega_ro);
  rep.set("alpha_o", r.alpha_o);
  rep.set("lower", to_string(r.lower) + " (" + to_string(r.lower_source) + ")");
  rep.set("upper", r.upper ? Json(to_string(*r.upper)) : Json());
  rep.set("chi_o", r.chi_o ? Json(*r.chi_o) : Json());
  rep.set("conclusive", r.conclusive());
  rep.set("probes", probe_list(r.probes));
  if (r.upper_certificate) rep.artifact(format_coloring(*r.upper_certificate));
  return r.conclusive() ? kOk : kInconclusive;
}

int cmd_cycle_value(const Args& a, Report& rep) {
  const auto v = theorem_value(a.r);
  std::string text = to_string(v.value) + " (case " + std::string(1, v.which);
  if (v.prime) text += ", p=" + std::to_string(*v.prime);
  rep.set("value", text + ")");
  return kOk;
}

int cmd_cycle_beta(const Args& a, Report& rep) {
  const auto b = beta(a.r);
  rep.set("beta", to_string(b.value));
  rep.set("witness", b.witness ? Json(std::to_string(*b.witness) + " (type-A)") : Json());
  return kOk;
}

int cmd_cycle_construct(const Args& a, Report& rep) {
  const auto c = construct_typeA_coloring(a.r);
  rep.set("palette", c.palette);
  rep.set("fold", c.fold);
  rep.set("ratio", to_string(ratio(c)));
  rep.artifact(format_coloring(c));
  return kOk;
}

int cmd_cycle_analyze(const Args& a, Report& rep) {
  const auto c = load_coloring(rep, a.coloring);
  const auto m = analyze_miser(a.r, c);
  if (!m.ok()) {
    rep.set("result", "rejected");
    rep.set("reason", m.rejection);
    return kFailed;
  }
  const auto& s = *m.structure;
  rep.set("result", "miser structure confirmed");
  rep.set("rotation", s.rotation);
  rep.set("q", s.quads_between);
  rep.set("t", s.triples);
  rep.set("A", brace(s.set_a));
  rep.set("B", brace(s.set_b));
  rep.set("C", brace(s.set_c));
  rep.set("D", brace(s.set_d));
  Json blocks = Json::array();
  for (const auto& b : s.blocks) blocks.push_back(to_string(b.kind) + "@" + std::to_string(b.start));
  rep.set("blocks", blocks);
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.t_matrix.size(); ++i) rows.push_back(s.row_string(static_cast<int>(i)));
  rep.set("T rows", rows);
  return kOk;
}

int cmd_target_build(const Args& a, Report& rep) {
  const auto t = build_target(a.l);
  rep.set("level", t.level);
  rep.set("n", t.n);
  rep.set("m", t.m);
  rep.set("arcs", t.graph.arc_count());
  rep.set("girth", girth(t.graph) ? Json(*girth(t.graph)) : Json());
  rep.artifact(format_digraph(t.graph));
  return kOk;
}

int cmd_target_nice(const Args& a, Report& rep) {
  const auto g = load_graph(rep, a.graph);
  const auto r = check_nice(g, a.k, a.budget());
  rep.set("verdict", to_string(r.verdict));
  rep.set("nodes", r.nodes);
  if (r.verdict == NicenessReport::Verdict::counterexample) {
    rep.set("signs", r.signs);
    rep.set("start", r.start);
    Json reached = Json::array();
    for (Vertex v : mask_to_vertices(r.reached)) reached.push_back(v);
    rep.set("reached", reached);
    return kFailed;
  }
  return r.verdict == NicenessReport::Verdict::nice ? kOk : kInconclusive;
}

int cmd_target_coloring(const Args& a, Report& rep) {
  const auto t = build_target(a.l);
  const auto c = tuple_coloring(t);
  rep.set("palette", c.palette);
  rep.set("fold", c.fold);
  rep.set("ratio", to_string(ratio(c)));
  rep.artifact(format_coloring(c));
  return kOk;
}

int cmd_target_epsilon(const Args& a, Report& rep) {
  const auto e = epsilon_report(parse_rational(a.eps));
  rep.set("eps", to_string(e.eps));
  rep.set("level", e.level);
  rep.set("n", e.n);
  rep.set("m", e.m);
  rep.set("girth threshold", e.girth_threshold);
  rep.set("bound", to_string(e.bound));
  return kOk;
}

ConsistentSubOrientation load_sub(Report& rep, const std::string& path) {
  return parse_suborientation(rep.load(path), path);
}

int cmd_kneser_extract(const Args& a, Report& rep) {
  const auto g = load_graph(rep, a.graph);
  const auto c = load_coloring(rep, a.coloring);
  const auto [sub, map] = extract_suborientation(g, c);
  rep.set("palette", sub.palette);
  rep.set("subset size", sub.subset_size);
  rep.set("vertices", sub.graph.vertex_count());
  rep.set("arcs", sub.graph.arc_count());
  rep.set("map", map);
  rep.artifact(format_suborientation(sub));
  return kOk;
}

int cmd_kneser_check(const Args& a, Report& rep) {
  const auto s = load_sub(rep, a.sub);
  if (const auto v = verify_consistency(s)) {
    rep.set("result", "inconsistent");
    rep.set("violation", v->message);
    return kFailed;
  }
  rep.set("result", "consistent");
  rep.set("labels", color_sets(s.labels));
  return kOk;
}

int cmd_kneser_blowup(const Args& a, Report& rep) {
  const auto s = blow_up(load_sub(rep, a.sub), a.factor);
  rep.set("palette", s.palette);
  rep.set("subset size", s.subset_size);
  rep.artifact(format_suborientation(s));
  return kOk;
}

int cmd_reproduce(const Args& a, Report& rep, const std::string& suite) {
  SuiteReport r;
  if (suite == "cycles") {
    r = reproduce_cycles(a.budget());
  } else if (suite == "planar") {
    r = reproduce_planar(a.budget());
  } else {
    rep.seed(a.seed);
    r = reproduce_properties(a.seed, 200, 50, a.budget());
  }
  rep.set("suite", r.suite);
  for (const auto& item : r.items) {
    rep.set(item.name, Json{{"expected", item.expected}, {"computed", item.computed}, {"status", item.pass ? "pass" : "FAIL"}});
  }
  rep.set("result", r.passed() ? "pass" : "FAIL");
  return r.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional oriented colouring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--budget-nodes", a.budget_nodes, "search node budget (default 1e8)");
  app.add_option("--time-limit", a.time_limit, "search time limit in seconds");
  app.add_option("--seed", a.seed, "seed for the random corpus");
  app.add_option("--out", a.out, "write the produced certificate or graph here");
  app.add_flag("--json", a.json, "emit one JSON document");

  std::vector<std::pair<CLI::App*, std::function<int(Report&)>>> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int(Report&)> run) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    handlers.emplace_back(sub, std::move(run));
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  auto* verify = leaf(&app, "verify", "check a b-fold colouring", [&](Report& r) { return cmd_verify(a, r); });
  verify->add_option("--graph", a.graph)->required();
  verify->add_option("--coloring", a.coloring)->required();

  auto* solve = group("solve", "exact searches");
  auto* bfold = leaf(solve, "bfold", "does a b-fold k-colouring exist", [&](Report& r) { return cmd_bfold(a, r); });
  bfold->add_option("--graph", a.graph)->required();
  bfold->add_option("--b", a.b)->required();
  bfold->add_option("--k", a.k)->required();
  auto* chio = leaf(solve, "chi-o", "oriented chromatic number", [&](Report& r) { return cmd_chi(a, r, 1); });
  chio->add_option("--graph", a.graph)->required();
  auto* chib = leaf(solve, "chi-b", "b-fold oriented chromatic number", [&](Report& r) { return cmd_chi(a, r, a.b); });
  chib->add_option("--graph", a.graph)->required();
  chib->add_option("--b", a.b)->required();
  auto* hom = leaf(solve, "hom", "homomorphism search", [&](Report& r) { return cmd_hom(a, r); });
  hom->add_option("--from", a.from)->required();
  hom->add_option("--to", a.to)->required();
  auto* sweep = leaf(solve, "sweep", "lower and upper bounds", [&](Report& r) { return cmd_sweep(a, r); });
  sweep->add_option("--graph", a.graph)->required();
  sweep->add_option("--bmax", a.b_max)->required();

  auto* cycle = group("cycle", "directed cycles");
  leaf(cycle, "value", "closed-form value", [&](Report& r) { return cmd_cycle_value(a, r); })
      ->add_option("--r", a.r)->required();
  leaf(cycle, "beta", "beta(r)", [&](Report& r) { return cmd_cycle_beta(a, r); })->add_option("--r", a.r)->required();
  leaf(cycle, "construct", "type-A colouring", [&](Report& r) { return cmd_cycle_construct(a, r); })
      ->add_option("--r", a.r)->required();
  auto* analyze = leaf(cycle, "analyze", "miser structure", [&](Report& r) { return cmd_cycle_analyze(a, r); });
  analyze->add_option("--r", a.r)->required();
  analyze->add_option("--coloring", a.coloring)->required();

  auto* target = group("target", "target graphs T_l");
  leaf(target, "build", "emit T_l", [&](Report& r) { return cmd_target_build(a, r); })
      ->add_option("--l", a.l)->required();
  auto* nice = leaf(target, "nice", "k-niceness", [&](Report& r) { return cmd_target_nice(a, r); });
  nice->add_option("--graph", a.graph)->required();
  nice->add_option("--k", a.k)->required();
  leaf(target, "coloring", "tuple colouring of T_l", [&](Report& r) { return cmd_target_coloring(a, r); })
      ->add_option("--l", a.l)->required();
  leaf(target, "epsilon", "level for a tolerance", [&](Report& r) { return cmd_target_epsilon(a, r); })
      ->add_option("--eps", a.eps, "P/Q")->required();

  auto* kneser = group("kneser", "consistent suborientations");
  auto* extract = leaf(kneser, "extract", "suborientation of a colouring", [&](Report& r) { return cmd_kneser_extract(a, r); });
  extract->add_option("--graph", a.graph)->required();
  extract->add_option("--coloring", a.coloring)->required();
  leaf(kneser, "check", "consistency", [&](Report& r) { return cmd_kneser_check(a, r); })
      ->add_option("--sub", a.sub)->required();
  auto* blowup = leaf(kneser, "blowup", "replace colours by blocks", [&](Report& r) { return cmd_kneser_blowup(a, r); });
  blowup->add_option("--sub", a.sub)->required();
  blowup->add_option("--c", a.factor)->required();

  auto* reproduce = group("reproduce", "fixed reproduction suites");
  for (const std::string suite : {"cycles", "planar", "properties"}) {
    leaf(reproduce, suite, suite + " suite", [&, suite](Report& r) { return cmd_reproduce(a, r, suite); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string command = "ofc";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];

  for (auto& [sub, run] : handlers) {
    if (!sub->parsed()) continue;
    Report rep;
    try {
      const int code = run(rep);
      rep.print(std::cout, a.json, command, a.out);
      return code;
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << '\n';
    }
    return kUsage;
  }
  return kUsage;
}
