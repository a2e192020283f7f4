#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ofc/cycles.hpp"
#include "ofc/kneser.hpp"
#include "ofc/random.hpp"
#include "ofc/solver.hpp"
#include "ofc/targets.hpp"

// Fixed reproduction suites. Each item compares an expected value with what
// the library computes; a suite passes when every item does.

namespace ofc {

struct SuiteItem {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;

  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass; });
  }
  void add(std::string name, std::string expected, std::string computed) {
    const bool pass = expected == computed;
    items.push_back({std::move(name), std::move(expected), std::move(computed), pass});
  }
};

namespace detail {

inline std::string sweep_summary(const BoundReport& r) {
  if (!r.conclusive()) return "inconclusive";
  return r.upper ? to_string(*r.upper) : "none";
}

}  // namespace detail

// Sweep value of C_r for r in 4..12 against the closed form. Folds up to 2
// reach the value when 3 | r or r = 7; the rest sweep up to 3.
inline SuiteReport reproduce_cycles(const SearchBudget& budget = {}) {
  SuiteReport out{"cycles", {}};
  for (int r = 4; r <= 12; ++r) {
    const Rational expected = theorem_value(r).value;
    const int b_max = r % 3 == 0 || r == 7 ? 2 : 3;
    const auto sweep = bound_sweep(directed_cycle(r), b_max, budget, "C_" + std::to_string(r));
    out.add("C_" + std::to_string(r) + " (b_max " + std::to_string(b_max) + ")", to_string(expected),
            detail::sweep_summary(sweep));
    if (sweep.conclusive()) {
      out.add("C_" + std::to_string(r) + " lower <= value", "yes", sweep.lower <= expected ? "yes" : "no");
    }
  }
  return out;
}

// T_l invariants, niceness of T_0 and T_1 and the tuple colouring ratios.
inline SuiteReport reproduce_planar(const SearchBudget& budget = {}) {
  SuiteReport out{"planar", {}};
  for (int l = 0; l <= 2; ++l) {
    const auto t = build_target(l);
    const std::string name = "T_" + std::to_string(l);
    bool regular = t.graph.arc_count() == static_cast<std::size_t>(2 * t.n);
    bool disjoint = true;
    for (Vertex v = 0; v < t.n; ++v) {
      regular = regular && t.graph.out_neighbors(v).size() == 2 && t.graph.in_neighbors(v).size() == 2 &&
                cardinality(t.tuples[v]) == t.m;
    }
    for (const Arc& a : t.graph.arcs()) disjoint = disjoint && (t.tuples[a.tail] & t.tuples[a.head]) == 0;
    out.add(name + " vertices", std::to_string((1 << (l + 2)) + 1), std::to_string(t.n));
    out.add(name + " in/out degree 2, tuples of size m", "yes", regular ? "yes" : "no");
    out.add(name + " tuples disjoint along arcs", "yes", disjoint ? "yes" : "no");
    const auto c = tuple_coloring(t);
    out.add(name + " tuple colouring ratio", to_string(Rational(4) + Rational(1, t.m)),
            is_valid_coloring(t.graph, c) ? to_string(ratio(c)) : "invalid");
  }
  for (int l = 0; l <= 1; ++l) {
    const auto t = build_target(l);
    out.add("T_" + std::to_string(l) + " " + std::to_string(t.n) + "-nice", "nice",
            to_string(check_nice(t.graph, t.n, budget).verdict));
  }
  return out;
}

struct PropertyCounts {
  int graphs = 0;
  int conclusive = 0;
  int sandwich_failures = 0;
  int pairs = 0;
  int homomorphic = 0;
  int compared = 0;
  int monotonicity_failures = 0;
  int pullback_failures = 0;
  int kneser_failures = 0;
};

// Sandwich max(omega_ro, |V|/alpha_o) <= upper <= chi_o over a seeded corpus,
// and upper(G) <= upper(H) with c o phi valid whenever G -> H.
inline PropertyCounts property_counts(std::uint64_t seed, int graph_count, int pair_count,
                                      const SearchBudget& budget = {}) {
  PropertyCounts n;
  for (const auto& g : random_corpus(seed, graph_count)) {
    ++n.graphs;
    const auto r = bound_sweep(g, 2, budget);
    if (!r.conclusive()) continue;
    ++n.conclusive;
    const Rational floor = std::max(Rational(r.omega_ro), Rational(g.vertex_count(), r.alpha_o));
    const bool ok = r.upper && r.chi_o && floor == r.lower && r.lower <= *r.upper &&
                    *r.upper <= Rational(*r.chi_o) && is_valid_coloring(g, *r.upper_certificate);
    if (!ok) ++n.sandwich_failures;
    if (ok) {
      const auto [sub, map] = extract_suborientation(g, *r.upper_certificate);
      if (verify_consistency(sub) || !is_homomorphism(g, sub.graph, map)) ++n.kneser_failures;
    }
  }
  for (const auto& [from, to] : random_pairs(seed, pair_count)) {
    ++n.pairs;
    const auto hom = hom_exists(from, to, budget);
    if (hom.outcome != Outcome::exists) continue;
    ++n.homomorphic;
    const auto rg = bound_sweep(from, 2, budget);
    const auto rh = bound_sweep(to, 2, budget);
    if (!rh.conclusive() || !rh.upper) continue;
    if (!is_valid_coloring(from, pull_back(*rh.upper_certificate, *hom.map))) ++n.pullback_failures;
    if (!rg.conclusive() || !rg.upper) continue;
    ++n.compared;
    if (*rg.upper > *rh.upper) ++n.monotonicity_failures;
  }
  return n;
}

inline SuiteReport reproduce_properties(std::uint64_t seed = kDefaultSeed, int graph_count = 200,
                                        int pair_count = 50, const SearchBudget& budget = {}) {
  const auto n = property_counts(seed, graph_count, pair_count, budget);
  SuiteReport out{"properties", {}};
  out.add("graphs", std::to_string(graph_count), std::to_string(n.graphs));
  out.add("conclusive sweeps", std::to_string(n.graphs), std::to_string(n.conclusive));
  out.add("sandwich failures", "0", std::to_string(n.sandwich_failures));
  out.add("suborientation failures", "0", std::to_string(n.kneser_failures));
  out.add("hom pairs", std::to_string(pair_count), std::to_string(n.pairs));
  out.add("pairs with G -> H", "> 0", n.homomorphic > 0 ? "> 0" : "0");
  out.add("pull-back failures", "0", std::to_string(n.pullback_failures));
  out.add("monotonicity failures", "0", std::to_string(n.monotonicity_failures));
  return out;
}

}  // namespace ofc
