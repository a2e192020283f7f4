#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofc/coloring.hpp"
#include "ofc/graph.hpp"

namespace ofc {

// Oriented subgraph of the Kneser graph KG(a, b): vertex v *is* the b-subset
// labels[v] of {0..a-1}.
struct ConsistentSubOrientation {
  int palette = 0;
  int subset_size = 0;
  OrientedGraph graph;
  std::vector<ColorSet> labels;

  friend bool operator==(const ConsistentSubOrientation&, const ConsistentSubOrientation&) = default;
};

struct ConsistencyViolation {
  enum class Kind { malformed_label, duplicate_label, intersecting_arc, opposing_arcs };
  Kind kind;
  Arc first{};
  Arc second{};
  std::string message;
};

inline std::string brace(ColorSet s) { return "{" + format_color_set(s) + "}"; }

inline std::optional<ConsistencyViolation> verify_consistency(const ConsistentSubOrientation& s) {
  using Kind = ConsistencyViolation::Kind;
  const int n = s.graph.vertex_count();
  if (static_cast<int>(s.labels.size()) != n) {
    return ConsistencyViolation{Kind::malformed_label, {}, {}, "label count does not match vertex count"};
  }
  if (s.palette <= 0 || s.palette > kMaxPalette || s.subset_size <= 0) {
    return ConsistencyViolation{Kind::malformed_label, {}, {}, "palette must be in 1..64 and subset size positive"};
  }
  const ColorSet palette_mask = s.palette == 64 ? ~ColorSet{0} : color_bit(s.palette) - 1;
  for (Vertex v = 0; v < n; ++v) {
    if (cardinality(s.labels[v]) != s.subset_size || (s.labels[v] & ~palette_mask) != 0) {
      return ConsistencyViolation{Kind::malformed_label, {v, v}, {v, v},
                                  "vertex " + std::to_string(v) + " label " + brace(s.labels[v]) + " is not a " +
                                      std::to_string(s.subset_size) + "-subset of 0.." +
                                      std::to_string(s.palette - 1)};
    }
    for (Vertex u = 0; u < v; ++u) {
      if (s.labels[u] == s.labels[v]) {
        return ConsistencyViolation{Kind::duplicate_label, {u, v}, {u, v},
                                    "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                        " carry the same label " + brace(s.labels[v])};
      }
    }
  }
  for (const Arc& a : s.graph.arcs()) {
    if ((s.labels[a.tail] & s.labels[a.head]) != 0) {
      return ConsistencyViolation{Kind::intersecting_arc, a, a,
                                  "arc " + brace(s.labels[a.tail]) + "->" + brace(s.labels[a.head]) +
                                      " joins non-disjoint sets"};
    }
  }
  // arcs xy, wz: x ∩ z ≠ ∅ forces y ∩ w = ∅
  for (const Arc& xy : s.graph.arcs()) {
    for (const Arc& wz : s.graph.arcs()) {
      if ((s.labels[xy.tail] & s.labels[wz.head]) != 0 && (s.labels[xy.head] & s.labels[wz.tail]) != 0) {
        return ConsistencyViolation{
            Kind::opposing_arcs, xy, wz,
            "arcs " + brace(s.labels[xy.tail]) + "->" + brace(s.labels[xy.head]) + " and " +
                brace(s.labels[wz.tail]) + "->" + brace(s.labels[wz.head]) + " point opposite ways"};
      }
    }
  }
  return std::nullopt;
}

// Builds a ConsistentSubOrientation, attaching "{..}" display labels.
inline ConsistentSubOrientation make_suborientation(int palette, int subset_size, std::vector<ColorSet> labels,
                                                    std::span<const Arc> arcs) {
  std::vector<std::string> names;
  names.reserve(labels.size());
  for (ColorSet s : labels) names.push_back(brace(s));
  ConsistentSubOrientation out;
  out.palette = palette;
  out.subset_size = subset_size;
  out.graph = build_graph(static_cast<int>(labels.size()), arcs, std::move(names));
  out.labels = std::move(labels);
  return out;
}

struct Extraction {
  ConsistentSubOrientation suborientation;
  // vertex of g -> vertex of the suborientation
  std::vector<Vertex> label_map;
};

// The graph on the colour sets used by c, with an arc XY whenever some arc
// uv of g has c(u) = X, c(v) = Y. Vertices appear in order of first use.
inline Extraction extract_suborientation(const OrientedGraph& g, const BFoldColoring& c) {
  if (auto violation = verify_coloring(g, c)) {
    throw std::invalid_argument("cannot extract from an invalid colouring: " + violation->describe(c));
  }
  std::map<ColorSet, Vertex> index;
  std::vector<ColorSet> labels;
  std::vector<Vertex> label_map(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = index.try_emplace(c.sets[v], static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(c.sets[v]);
    label_map[v] = it->second;
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) arcs.push_back({label_map[a.tail], label_map[a.head]});
  return {make_suborientation(c.palette, c.fold, std::move(labels), arcs), std::move(label_map)};
}

// Replaces colour t by the block {t*factor, ..., t*factor + factor - 1}.
inline ConsistentSubOrientation blow_up(const ConsistentSubOrientation& s, int factor) {
  if (factor < 1) throw std::invalid_argument("blow-up factor must be >= 1, got " + std::to_string(factor));
  if (s.palette * factor > kMaxPalette) {
    throw std::invalid_argument("blown-up palette " + std::to_string(s.palette * factor) + " exceeds 64");
  }
  if (auto violation = verify_consistency(s)) {
    throw std::invalid_argument("cannot blow up an inconsistent suborientation: " + violation->message);
  }
  std::vector<ColorSet> labels;
  labels.reserve(s.labels.size());
  for (ColorSet label : s.labels) {
    ColorSet wide = 0;
    for (int t : colors_of(label)) wide |= cyclic_block(t * factor, factor, kMaxPalette);
    labels.push_back(wide);
  }
  return make_suborientation(s.palette * factor, s.subset_size * factor, std::move(labels), s.graph.arcs());
}

// The suborientation viewed as a colouring of its own graph.
inline BFoldColoring as_coloring(const ConsistentSubOrientation& s) {
  return BFoldColoring{s.palette, s.subset_size, s.labels};
}

}  // namespace ofc
