#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofc/graph.hpp"
#include "ofc/rational.hpp"

namespace ofc {

inline constexpr int kMaxPalette = 64;

// Subset of the palette {0..63}; bit t set iff colour t is present.
using ColorSet = std::uint64_t;

inline constexpr ColorSet color_bit(int color) { return ColorSet{1} << color; }

inline ColorSet make_color_set(std::initializer_list<int> colors) {
  ColorSet s = 0;
  for (int c : colors) {
    if (c < 0 || c >= kMaxPalette) throw std::invalid_argument("colour out of range: " + std::to_string(c));
    s |= color_bit(c);
  }
  return s;
}

// Contiguous block {first, ..., first + size - 1} reduced modulo `modulus`.
inline ColorSet cyclic_block(int first, int size, int modulus) {
  ColorSet s = 0;
  for (int j = 0; j < size; ++j) s |= color_bit((first + j) % modulus);
  return s;
}

inline int cardinality(ColorSet s) { return std::popcount(s); }

inline std::vector<int> colors_of(ColorSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

// "0,1,5"
inline std::string format_color_set(ColorSet s) {
  std::string out;
  for (int c : colors_of(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

// b-fold colouring from a palette of k colours: one b-subset per vertex.
struct BFoldColoring {
  int palette = 0;
  int fold = 0;
  std::vector<ColorSet> sets;

  friend bool operator==(const BFoldColoring&, const BFoldColoring&) = default;
};

inline Rational ratio(const BFoldColoring& c) {
  if (c.fold <= 0) throw std::invalid_argument("fold must be positive");
  return Rational(c.palette, c.fold);
}

// c ∘ map: pulls a colouring of the target back along a vertex map.
inline BFoldColoring pull_back(const BFoldColoring& c, std::span<const Vertex> map) {
  BFoldColoring out{c.palette, c.fold, {}};
  out.sets.reserve(map.size());
  for (Vertex v : map) out.sets.push_back(c.sets.at(v));
  return out;
}

struct ColoringViolation {
  enum class Kind {
    // tail and head of one arc share a colour
    shared_color_on_arc,
    // arcs xy, zw with c(x) ∩ c(w) and c(y) ∩ c(z) both non-empty
    opposing_arcs,
  };
  Kind kind;
  Arc first;
  Arc second;

  std::string describe(const BFoldColoring& c) const {
    if (kind == Kind::shared_color_on_arc) {
      return "arc " + to_string(first) + " joins intersecting sets {" +
             format_color_set(c.sets[first.tail]) + "} and {" + format_color_set(c.sets[first.head]) + "}";
    }
    const ColorSet xw = c.sets[first.tail] & c.sets[second.head];
    const ColorSet yz = c.sets[first.head] & c.sets[second.tail];
    return "arcs " + to_string(first) + " and " + to_string(second) + ": c(" + std::to_string(first.tail) +
           ") meets c(" + std::to_string(second.head) + ") in {" + format_color_set(xw) + "} while c(" +
           std::to_string(first.head) + ") meets c(" + std::to_string(second.tail) + ") in {" +
           format_color_set(yz) + "}";
  }

  friend bool operator==(const ColoringViolation&, const ColoringViolation&) = default;
};

// Throws std::invalid_argument when the colouring is not well formed for g:
// wrong vertex count, a set of size != fold, or a colour outside the palette.
inline void check_well_formed(const OrientedGraph& g, const BFoldColoring& c) {
  if (c.palette <= 0 || c.palette > kMaxPalette) {
    throw std::invalid_argument("palette size must be in 1..64, got " + std::to_string(c.palette));
  }
  if (c.fold <= 0) throw std::invalid_argument("fold must be positive, got " + std::to_string(c.fold));
  if (static_cast<int>(c.sets.size()) != g.vertex_count()) {
    throw std::invalid_argument("colouring assigns " + std::to_string(c.sets.size()) + " sets but graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
  const ColorSet palette_mask = c.palette == 64 ? ~ColorSet{0} : color_bit(c.palette) - 1;
  for (std::size_t v = 0; v < c.sets.size(); ++v) {
    if (cardinality(c.sets[v]) != c.fold) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has " + std::to_string(cardinality(c.sets[v])) +
                                  " colours, expected " + std::to_string(c.fold));
    }
    if ((c.sets[v] & ~palette_mask) != 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " uses a colour outside 0.." +
                                  std::to_string(c.palette - 1));
    }
  }
}

// Returns nullopt when c is a b-fold oriented colouring of g, otherwise the
// first violation: the first arc (in sorted order) whose ends share a colour,
// or failing that the lexicographically first ordered arc pair in conflict.
inline std::optional<ColoringViolation> verify_coloring(const OrientedGraph& g, const BFoldColoring& c) {
  check_well_formed(g, c);
  const auto& arcs = g.arcs();
  for (const Arc& a : arcs) {
    if ((c.sets[a.tail] & c.sets[a.head]) != 0) {
      return ColoringViolation{ColoringViolation::Kind::shared_color_on_arc, a, a};
    }
  }
  for (const Arc& xy : arcs) {
    for (const Arc& zw : arcs) {
      if ((c.sets[xy.tail] & c.sets[zw.head]) != 0 && (c.sets[xy.head] & c.sets[zw.tail]) != 0) {
        return ColoringViolation{ColoringViolation::Kind::opposing_arcs, xy, zw};
      }
    }
  }
  return std::nullopt;
}

inline bool is_valid_coloring(const OrientedGraph& g, const BFoldColoring& c) {
  return !verify_coloring(g, c).has_value();
}

}  // namespace ofc
