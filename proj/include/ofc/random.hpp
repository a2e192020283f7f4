#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ofc/graph.hpp"

namespace ofc {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Each ordered pair (u, v), u != v, becomes an arc with probability 1/3,
// unless (v, u) was already drawn. Uses raw engine output only, so the
// corpus is identical across standard libraries.
inline OrientedGraph random_oriented_graph(std::mt19937_64& rng, int vertex_count) {
  std::vector<Arc> arcs;
  std::vector<char> taken(static_cast<std::size_t>(vertex_count) * vertex_count, 0);
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v = 0; v < vertex_count; ++v) {
      if (u == v) continue;
      const bool draw = rng() % 3 == 0;
      if (!draw || taken[static_cast<std::size_t>(v) * vertex_count + u]) continue;
      taken[static_cast<std::size_t>(u) * vertex_count + v] = 1;
      arcs.push_back({u, v});
    }
  }
  return build_graph(vertex_count, arcs);
}

// `count` graphs with 4..8 vertices.
inline std::vector<OrientedGraph> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<OrientedGraph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_oriented_graph(rng, 4 + static_cast<int>(rng() % 5)));
  return out;
}

struct GraphPair {
  OrientedGraph from;
  OrientedGraph to;
};

// Even-indexed pairs are independent random graphs; odd-indexed pairs plant
// a homomorphism by drawing a random vertex map into `to` and keeping each
// arc pulled back along it with probability 1/2.
inline std::vector<GraphPair> random_pairs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<GraphPair> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    OrientedGraph to = random_oriented_graph(rng, 4 + static_cast<int>(rng() % 5));
    const int n = 4 + static_cast<int>(rng() % 5);
    if (i % 2 == 0) {
      out.push_back({random_oriented_graph(rng, n), std::move(to)});
      continue;
    }
    std::vector<Vertex> map(n);
    for (auto& image : map) image = static_cast<Vertex>(rng() % to.vertex_count());
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && to.has_arc(map[u], map[v]) && rng() % 2 == 0) arcs.push_back({u, v});
      }
    }
    out.push_back({build_graph(n, arcs), std::move(to)});
  }
  return out;
}

}  // namespace ofc
