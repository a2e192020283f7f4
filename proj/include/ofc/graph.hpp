#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ofc {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

// Thrown when an arc list does not describe an oriented graph.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind { loop, two_cycle, out_of_range, too_large };

  GraphError(Kind kind, Arc arc, const std::string& what)
      : std::invalid_argument(what), kind_(kind), arc_(arc) {}

  Kind kind() const noexcept { return kind_; }
  Arc arc() const noexcept { return arc_; }

 private:
  Kind kind_;
  Arc arc_;
};

// Loop-free, 2-cycle-free digraph on vertices 0..n-1. Immutable once built;
// arcs are kept sorted lexicographically so that every traversal is
// deterministic.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_.at(v); }

  bool has_arc(Vertex u, Vertex v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
  }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.arcs_ == b.arcs_;
  }

  friend OrientedGraph build_graph(int vertex_count, std::span<const Arc> arcs,
                                   std::vector<std::string> labels);

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::string> labels_;
};

// Validates and builds. Duplicate arcs collapse; loops, 2-cycles and
// out-of-range endpoints throw GraphError naming the offending arc.
inline OrientedGraph build_graph(int vertex_count, std::span<const Arc> arcs,
                                 std::vector<std::string> labels = {}) {
  if (vertex_count < 0) {
    throw GraphError(GraphError::Kind::out_of_range, {}, "negative vertex count");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match vertex count " + std::to_string(vertex_count));
  }
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  for (const Arc& a : sorted) {
    if (a.tail < 0 || a.head < 0 || a.tail >= vertex_count || a.head >= vertex_count) {
      throw GraphError(GraphError::Kind::out_of_range, a,
                       "arc " + to_string(a) + " has an endpoint outside 0.." +
                           std::to_string(vertex_count - 1));
    }
    if (a.tail == a.head) {
      throw GraphError(GraphError::Kind::loop, a, "arc " + to_string(a) + " is a loop");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Arc& a : sorted) {
    if (std::binary_search(sorted.begin(), sorted.end(), Arc{a.head, a.tail})) {
      const Arc first = std::min(a, Arc{a.head, a.tail});
      throw GraphError(GraphError::Kind::two_cycle, first,
                       "arcs " + to_string(first) + " and " + to_string(Arc{first.head, first.tail}) +
                           " form a 2-cycle");
    }
  }

  OrientedGraph g;
  g.arcs_ = std::move(sorted);
  g.out_.assign(vertex_count, {});
  g.in_.assign(vertex_count, {});
  for (const Arc& a : g.arcs_) {
    g.out_[a.tail].push_back(a.head);
    g.in_[a.head].push_back(a.tail);
  }
  for (auto& v : g.in_) std::sort(v.begin(), v.end());
  g.labels_ = std::move(labels);
  return g;
}

inline OrientedGraph build_graph(int vertex_count, std::initializer_list<Arc> arcs) {
  return build_graph(vertex_count, std::span<const Arc>(arcs.begin(), arcs.size()));
}

// C_r with arcs u_i -> u_{i+1 mod r}.
inline OrientedGraph directed_cycle(int r) {
  if (r < 3) throw std::invalid_argument("directed cycle needs r >= 3, got " + std::to_string(r));
  std::vector<Arc> arcs;
  arcs.reserve(r);
  for (int i = 0; i < r; ++i) arcs.push_back({i, (i + 1) % r});
  return build_graph(r, arcs);
}

inline OrientedGraph directed_path(int vertex_count) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < vertex_count; ++i) arcs.push_back({i, i + 1});
  return build_graph(vertex_count, arcs);
}

// Shortest cycle of the underlying simple graph; nullopt for forests.
inline std::optional<int> girth(const OrientedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> nbr(n);
  for (const Arc& a : g.arcs()) {
    nbr[a.tail].push_back(a.head);
    nbr[a.head].push_back(a.tail);
  }
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> queue;
    dist[root] = 0;
    parent[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      if (2 * dist[u] >= best) break;
      for (Vertex w : nbr[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

// Checks that `map` sends every arc of `from` onto an arc of `to`.
inline bool is_homomorphism(const OrientedGraph& from, const OrientedGraph& to,
                            std::span<const Vertex> map) {
  if (static_cast<int>(map.size()) != from.vertex_count()) return false;
  for (Vertex image : map) {
    if (image < 0 || image >= to.vertex_count()) return false;
  }
  return std::all_of(from.arcs().begin(), from.arcs().end(),
                     [&](const Arc& a) { return to.has_arc(map[a.tail], map[a.head]); });
}

inline constexpr int kMaxBitsetVertices = 64;

using VertexMask = std::uint64_t;

inline constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << v; }

inline std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Symmetric relation: x ~ y iff x, y are adjacent or joined by a directed
// 2-path in either direction.
class AugmentedAdjacency {
 public:
  explicit AugmentedAdjacency(const OrientedGraph& g) : rows_(g.vertex_count(), 0) {
    const int n = g.vertex_count();
    if (n > kMaxBitsetVertices) {
      throw GraphError(GraphError::Kind::too_large, {},
                       "relative-clique computations support at most 64 vertices, got " +
                           std::to_string(n));
    }
    for (const Arc& a : g.arcs()) link(a.tail, a.head);
    for (Vertex w = 0; w < n; ++w) {
      for (Vertex x : g.in_neighbors(w)) {
        for (Vertex y : g.out_neighbors(w)) {
          if (x != y) link(x, y);
        }
      }
    }
  }

  int vertex_count() const noexcept { return static_cast<int>(rows_.size()); }
  bool related(Vertex x, Vertex y) const { return (rows_.at(x) >> y) & 1U; }
  VertexMask row(Vertex x) const { return rows_.at(x); }

  friend bool operator==(const AugmentedAdjacency&, const AugmentedAdjacency&) = default;

 private:
  void link(Vertex x, Vertex y) {
    rows_[x] |= vertex_bit(y);
    rows_[y] |= vertex_bit(x);
  }

  std::vector<VertexMask> rows_;
};

struct VertexSetResult {
  int size = 0;
  std::vector<Vertex> witness;
};

namespace detail {

// Maximum clique of a bitset adjacency (irreflexive rows) by greedy-colouring
// bounded branch and bound.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(std::vector<VertexMask> rows) : rows_(std::move(rows)) {}

  VertexSetResult run() {
    const int n = static_cast<int>(rows_.size());
    const VertexMask all = n == 64 ? ~VertexMask{0} : (vertex_bit(n) - 1);
    expand(0, 0, all);
    return {best_size_, mask_to_vertices(best_)};
  }

 private:
  void expand(VertexMask current, int size, VertexMask candidates) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> bound;
    VertexMask uncoloured = candidates;
    int colour = 0;
    while (uncoloured != 0) {
      ++colour;
      VertexMask free = uncoloured;
      while (free != 0) {
        const Vertex v = std::countr_zero(free);
        free &= ~vertex_bit(v) & ~rows_[v];
        uncoloured &= ~vertex_bit(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      const Vertex v = order[i];
      expand(current | vertex_bit(v), size + 1, candidates & rows_[v]);
      candidates &= ~vertex_bit(v);
    }
  }

  std::vector<VertexMask> rows_;
  VertexMask best_ = 0;
  int best_size_ = 0;
};

}  // namespace detail

// Oriented relative clique number: a maximum set whose members are pairwise
// adjacent or joined by a directed 2-path.
inline VertexSetResult omega_ro(const OrientedGraph& g) {
  const AugmentedAdjacency aug(g);
  std::vector<VertexMask> rows(aug.vertex_count());
  for (Vertex v = 0; v < aug.vertex_count(); ++v) rows[v] = aug.row(v);
  return detail::MaxCliqueSearch(std::move(rows)).run();
}

// Oriented independence number: a maximum set with no pair adjacent or
// joined by a directed 2-path.
inline VertexSetResult alpha_o(const OrientedGraph& g) {
  const AugmentedAdjacency aug(g);
  const int n = aug.vertex_count();
  const VertexMask all = n == 64 ? ~VertexMask{0} : (vertex_bit(n) - 1);
  std::vector<VertexMask> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = ~aug.row(v) & all & ~vertex_bit(v);
  return detail::MaxCliqueSearch(std::move(rows)).run();
}

// Direct definition check, independent of AugmentedAdjacency.
inline bool joined_by_2path(const OrientedGraph& g, Vertex x, Vertex y) {
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if ((g.has_arc(x, w) && g.has_arc(w, y)) || (g.has_arc(y, w) && g.has_arc(w, x))) return true;
  }
  return false;
}

}  // namespace ofc
