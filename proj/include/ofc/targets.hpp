#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofc/coloring.hpp"
#include "ofc/graph.hpp"
#include "ofc/rational.hpp"
#include "ofc/solver.hpp"

namespace ofc {

inline constexpr int kMaxTargetLevel = 3;

// Circulant target T_l on n = 2^(l+2) + 1 vertices; x_i carries the m-tuple
// (i, i+1, ..., i+m-1) mod n with m = 2^l, and x_i -> x_{i+m}, x_{i+m+1}.
struct TargetGraph {
  int level = 0;
  int m = 1;
  int n = 5;
  OrientedGraph graph;
  std::vector<ColorSet> tuples;
};

inline TargetGraph build_target(int level) {
  if (level < 0 || level > kMaxTargetLevel) {
    throw std::invalid_argument("target level must be in 0.." + std::to_string(kMaxTargetLevel) + ", got " +
                                std::to_string(level));
  }
  TargetGraph t;
  t.level = level;
  t.m = 1 << level;
  t.n = (1 << (level + 2)) + 1;
  std::vector<Arc> arcs;
  std::vector<std::string> labels;
  for (int i = 0; i < t.n; ++i) {
    arcs.push_back({i, (i + t.m) % t.n});
    arcs.push_back({i, (i + t.m + 1) % t.n});
    t.tuples.push_back(cyclic_block(i, t.m, t.n));
    std::string label = "(";
    for (int j = 0; j < t.m; ++j) label += (j ? "," : "") + std::to_string((i + j) % t.n);
    labels.push_back(label + ")");
  }
  t.graph = build_graph(t.n, arcs, std::move(labels));
  return t;
}

// The tuples as an m-fold n-colouring of T_l.
inline BFoldColoring tuple_coloring(const TargetGraph& t) { return BFoldColoring{t.n, t.m, t.tuples}; }

inline VertexMask out_neighborhood(const OrientedGraph& g, VertexMask set) {
  VertexMask out = 0;
  for (Vertex v : mask_to_vertices(set)) {
    for (Vertex w : g.out_neighbors(v)) out |= vertex_bit(w);
  }
  return out;
}

inline VertexMask in_neighborhood(const OrientedGraph& g, VertexMask set) {
  VertexMask out = 0;
  for (Vertex v : mask_to_vertices(set)) {
    for (Vertex w : g.in_neighbors(v)) out |= vertex_bit(w);
  }
  return out;
}

// N^alpha(x) with alpha = signs[0..k-1]; signs[k-1] is applied first.
inline VertexMask signed_neighborhood(const OrientedGraph& g, const std::string& signs, Vertex x) {
  VertexMask set = vertex_bit(x);
  for (auto it = signs.rbegin(); it != signs.rend(); ++it) {
    set = *it == '+' ? out_neighborhood(g, set) : in_neighborhood(g, set);
  }
  return set;
}

struct NicenessReport {
  enum class Verdict { nice, counterexample, inconclusive };
  int k = 0;
  Verdict verdict = Verdict::inconclusive;
  // counterexample: N^signs(start) = reached != V(g)
  std::string signs;
  Vertex start = 0;
  VertexMask reached = 0;
  std::uint64_t nodes = 0;
};

inline std::string to_string(NicenessReport::Verdict v) {
  switch (v) {
    case NicenessReport::Verdict::nice: return "nice";
    case NicenessReport::Verdict::counterexample: return "counterexample";
    case NicenessReport::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

// Is N^alpha(x) = V(g) for every alpha in {+,-}^k and every vertex x? The
// sign tree is walked depth first so prefixes share their propagated set; a
// full set stays full when every vertex has an in- and an out-neighbour.
inline NicenessReport check_nice(const OrientedGraph& g, int k, const SearchBudget& budget = {}) {
  const int n = g.vertex_count();
  if (n > kMaxBitsetVertices) throw std::invalid_argument("niceness check supports at most 64 vertices");
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  const VertexMask all = n == 64 ? ~VertexMask{0} : vertex_bit(n) - 1;
  bool saturates = true;
  for (Vertex v = 0; v < n; ++v) {
    if (g.out_neighbors(v).empty() || g.in_neighbors(v).empty()) saturates = false;
  }

  NicenessReport report;
  report.k = k;
  detail::BudgetMeter meter(budget);
  // applied[i] is the i-th sign applied, so it is alpha_{k-i}
  std::string applied;
  bool failed = false;
  std::function<void(VertexMask)> walk = [&](VertexMask set) {
    if (failed || !meter.tick()) return;
    const int depth = static_cast<int>(applied.size());
    if (set == all && saturates) return;
    if (depth == k || set == 0) {
      if (set == all) return;
      failed = true;
      // pad an emptied set with '+' so the counterexample has length k
      std::string full = applied + std::string(k - depth, '+');
      report.signs.assign(full.rbegin(), full.rend());
      report.reached = depth == k ? set : 0;
      return;
    }
    for (char sign : {'+', '-'}) {
      applied.push_back(sign);
      walk(sign == '+' ? out_neighborhood(g, set) : in_neighborhood(g, set));
      applied.pop_back();
      if (failed || meter.exhausted()) return;
    }
  };
  for (Vertex x = 0; x < n && !failed && !meter.exhausted(); ++x) {
    applied.clear();
    walk(vertex_bit(x));
    if (failed) report.start = x;
  }
  report.nodes = meter.nodes();
  if (failed) {
    report.verdict = NicenessReport::Verdict::counterexample;
  } else {
    report.verdict = meter.exhausted() ? NicenessReport::Verdict::inconclusive : NicenessReport::Verdict::nice;
  }
  return report;
}

// For a tolerance eps > 0: the smallest l with 1/2^l <= eps, the target T_l,
// and the girth threshold 5n - 1 above which planar graphs map to T_l
// (conditional on the external niceness-to-homomorphism result).
struct EpsilonReport {
  Rational eps{0};
  int level = 0;
  long long m = 1;
  long long n = 5;
  long long girth_threshold = 24;
  Rational bound{5};
};

inline EpsilonReport epsilon_report(const Rational& eps) {
  if (eps <= Rational(0)) throw std::invalid_argument("eps must be positive, got " + to_string(eps));
  EpsilonReport r;
  r.eps = eps;
  while (Rational(1, std::int64_t{1} << r.level) > eps) {
    if (++r.level > 60) throw std::invalid_argument("eps too small: " + to_string(eps));
  }
  r.m = 1LL << r.level;
  r.n = (1LL << (r.level + 2)) + 1;
  r.girth_threshold = 5 * r.n - 1;
  r.bound = Rational(4) + Rational(1, r.m);
  return r;
}

}  // namespace ofc
