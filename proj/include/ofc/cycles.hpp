#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofc/coloring.hpp"
#include "ofc/graph.hpp"
#include "ofc/rational.hpp"

namespace ofc {

// Primes above 3 split by residue mod 4: type A (3 mod 4) and type B (1 mod 4).
struct PrimeType {
  enum class Kind { type_a, type_b };
  int p = 0;
  Kind kind = Kind::type_a;
};

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// nullopt for 2, 3, composites and non-positive input.
inline std::optional<PrimeType> classify_prime(long long p) {
  if (p <= 3 || !is_prime(p)) return std::nullopt;
  return PrimeType{static_cast<int>(p), p % 4 == 3 ? PrimeType::Kind::type_a : PrimeType::Kind::type_b};
}

inline std::string to_string(PrimeType::Kind kind) {
  return kind == PrimeType::Kind::type_a ? "type-A" : "type-B";
}

// Distinct prime factors in increasing order.
inline std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::optional<int> least_type_a_factor(long long r) {
  for (long long p : prime_factors(r)) {
    if (auto t = classify_prime(p); t && t->kind == PrimeType::Kind::type_a) return t->p;
  }
  return std::nullopt;
}

struct BetaValue {
  long long r = 0;
  Rational value{0};
  // least type-A prime factor, if any
  std::optional<int> witness;
};

// beta(r) = 4/(p+1) for the least type-A prime factor p of r, else 0. r > 5.
inline BetaValue beta(long long r) {
  if (r <= 5) throw std::invalid_argument("beta(r) is defined for r > 5, got " + std::to_string(r));
  BetaValue out{r, Rational(0), least_type_a_factor(r)};
  if (out.witness) out.value = Rational(4, *out.witness + 1);
  return out;
}

struct CycleValue {
  Rational value{0};
  // 'a': r = 0 mod 3, 'b': r = 4, 'c': r = 5, 'd': 4 - beta(r)
  char which = 'a';
  std::optional<int> prime;
};

// Fractional oriented chromatic number of the directed cycle C_r.
inline CycleValue theorem_value(long long r) {
  if (r < 3) throw std::invalid_argument("directed cycles need r >= 3, got " + std::to_string(r));
  if (r % 3 == 0) return {Rational(3), 'a', std::nullopt};
  if (r == 4) return {Rational(4), 'b', std::nullopt};
  if (r == 5) return {Rational(5), 'c', std::nullopt};
  const BetaValue b = beta(r);
  return {Rational(4) - b.value, 'd', b.witness};
}

// With p = 4k - 1 the least type-A prime factor of r: the k-fold p-colouring
// sending u_x to {ik, ..., ik + k - 1} mod p where i = x mod p.
inline BFoldColoring construct_typeA_coloring(int r) {
  if (r <= 5 || r % 3 == 0) {
    throw std::invalid_argument("type-A construction needs r > 5 and r not divisible by 3, got " + std::to_string(r));
  }
  const auto p = least_type_a_factor(r);
  if (!p) {
    throw std::invalid_argument(std::to_string(r) + " has no type-A prime factor; no colouring below 4 exists");
  }
  if (*p > kMaxPalette) throw std::invalid_argument("palette " + std::to_string(*p) + " exceeds 64");
  const int k = (*p + 1) / 4;
  BFoldColoring c{*p, k, {}};
  c.sets.reserve(r);
  for (int x = 0; x < r; ++x) c.sets.push_back(cyclic_block((x % *p) * k, k, *p));
  return c;
}

enum class BlockKind { triple, quad };

inline std::string to_string(BlockKind k) { return k == BlockKind::triple ? "triple" : "quad"; }

struct Block {
  BlockKind kind = BlockKind::triple;
  int start = 0;  // vertex index of the first label
  int length = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

// Which base sets a label meets.
enum BaseBit : std::uint8_t { meets_a = 1, meets_b = 2, meets_c = 4, meets_d = 8 };

struct MiserStructure {
  int rotation = 0;
  ColorSet set_a = 0, set_b = 0, set_c = 0, set_d = 0;
  // indexed by vertex; BaseBit flags
  std::vector<std::uint8_t> pattern;
  // cyclic order starting with the triple at `rotation`
  std::vector<Block> blocks;
  // t_matrix[i][j] = 1 iff c(u_i) and c(u_j) intersect
  std::vector<std::vector<std::uint8_t>> t_matrix;
  int quads_between = 0;
  int triples = 0;

  std::string row_string(int i) const {
    std::string s;
    for (auto bit : t_matrix.at(i)) s += bit ? '1' : '0';
    return s;
  }
};

struct MiserAnalysis {
  std::optional<MiserStructure> structure;
  // names the failed invariant when structure is empty
  std::string rejection;

  bool ok() const { return structure.has_value(); }
};

namespace detail {

struct Bases {
  ColorSet a, b, c, d;
};

inline std::uint8_t classify_label(ColorSet label, const Bases& s) {
  std::uint8_t bits = 0;
  if (label & s.a) bits |= meets_a;
  if (label & s.b) bits |= meets_b;
  if (label & s.c) bits |= meets_c;
  if (label & s.d) bits |= meets_d;
  return bits;
}

// Splits the labels read from `rotation` onwards into triples and quads.
// Triple: (A* D, A B* D, C* D). Quad: (A* D, A* B* D, B* C* D, C* D).
// Starred sets must be met; omitted ones must be avoided.
inline std::optional<std::vector<Block>> parse_blocks(const std::vector<ColorSet>& sets, int rotation,
                                                      const Bases& bases) {
  const int r = static_cast<int>(sets.size());
  auto bits_at = [&](int pos) { return classify_label(sets[(rotation + pos) % r], bases); };
  auto is = [](std::uint8_t bits, std::uint8_t must, std::uint8_t avoid) {
    return (bits & must) == must && (bits & avoid) == 0;
  };
  std::vector<Block> blocks;
  int pos = 0;
  while (pos < r) {
    if (pos + 2 >= r) return std::nullopt;
    const auto first = bits_at(pos);
    const auto second = bits_at(pos + 1);
    const auto third = bits_at(pos + 2);
    if (!is(first, meets_a, meets_b | meets_c) || !is(second, meets_b, meets_c)) return std::nullopt;
    if (is(third, meets_c, meets_a | meets_b)) {
      blocks.push_back({BlockKind::triple, (rotation + pos) % r, 3});
      pos += 3;
      continue;
    }
    if (pos + 3 >= r) return std::nullopt;
    if (is(second, meets_a, 0) && is(third, meets_b | meets_c, meets_a) &&
        is(bits_at(pos + 3), meets_c, meets_a | meets_b)) {
      blocks.push_back({BlockKind::quad, (rotation + pos) % r, 4});
      pos += 4;
      continue;
    }
    return std::nullopt;
  }
  return blocks;
}

inline Bases bases_at(const std::vector<ColorSet>& sets, int rotation, int palette) {
  const int r = static_cast<int>(sets.size());
  Bases s{sets[rotation], sets[(rotation + 1) % r], sets[(rotation + 2) % r], 0};
  const ColorSet all = palette == 64 ? ~ColorSet{0} : color_bit(palette) - 1;
  s.d = all & ~(s.a | s.b | s.c);
  return s;
}

// Quads between successive triples, in cyclic order.
inline std::vector<int> triple_gaps(const std::vector<Block>& blocks) {
  std::vector<int> gaps;
  int pending = 0;
  const int count = static_cast<int>(blocks.size());
  // start from the first triple and walk once around
  int first = 0;
  while (first < count && blocks[first].kind != BlockKind::triple) ++first;
  if (first == count) return gaps;
  for (int step = 1; step <= count; ++step) {
    const Block& b = blocks[(first + step) % count];
    if (b.kind == BlockKind::quad) {
      ++pending;
    } else {
      gaps.push_back(pending);
      pending = 0;
    }
  }
  return gaps;
}

}  // namespace detail

// Decomposes a colouring of C_r with k/b < 4 into triples and quads and
// checks: partition, no consecutive triples, constant separation q,
// r = (4q+3)t, the cyclic-shift property of the intersection matrix, the
// per-colour usage bound (q+1)t, and that every triple-start rotation
// yields the same (q, t). A rejection means one of these failed.
inline MiserAnalysis analyze_miser(int r, const BFoldColoring& c) {
  if (r <= 5 || r % 3 == 0) {
    throw std::invalid_argument("miser analysis needs r > 5 and r not divisible by 3, got " + std::to_string(r));
  }
  const OrientedGraph cycle = directed_cycle(r);
  if (auto violation = verify_coloring(cycle, c)) {
    throw std::invalid_argument("not a valid colouring of C_" + std::to_string(r) + ": " + violation->describe(c));
  }
  if (c.palette >= 4 * c.fold) {
    throw std::invalid_argument("not a miser colouring: k/b = " + to_string(ratio(c)) + " >= 4");
  }

  MiserAnalysis result;
  auto reject = [&](std::string why) {
    result.rejection = std::move(why);
    return result;
  };

  std::optional<std::vector<Block>> blocks;
  int rotation = 0;
  for (; rotation < r; ++rotation) {
    const auto bases = detail::bases_at(c.sets, rotation, c.palette);
    if ((bases.a & bases.b) || (bases.a & bases.c) || (bases.b & bases.c)) continue;
    blocks = detail::parse_blocks(c.sets, rotation, bases);
    if (blocks && blocks->front().kind == BlockKind::triple) break;
    blocks.reset();
  }
  if (!blocks) return reject("block decomposition: no rotation splits the labels into triples and quads");

  MiserStructure s;
  s.rotation = rotation;
  const auto bases = detail::bases_at(c.sets, rotation, c.palette);
  s.set_a = bases.a;
  s.set_b = bases.b;
  s.set_c = bases.c;
  s.set_d = bases.d;
  s.pattern.resize(r);
  for (int v = 0; v < r; ++v) s.pattern[v] = detail::classify_label(c.sets[v], bases);
  s.blocks = *blocks;

  int covered = 0;
  for (const Block& b : s.blocks) covered += b.length;
  if (covered != r) return reject("partition: blocks cover " + std::to_string(covered) + " of " + std::to_string(r));

  const auto gaps = detail::triple_gaps(s.blocks);
  s.triples = static_cast<int>(gaps.size());
  for (int gap : gaps) {
    if (gap == 0) return reject("no consecutive triples: two triples are adjacent");
  }
  for (int gap : gaps) {
    if (gap != gaps.front()) return reject("constant separation: quads between triples vary");
  }
  s.quads_between = gaps.front();
  if (r != (4 * s.quads_between + 3) * s.triples) {
    return reject("r = (4q+3)t fails with q=" + std::to_string(s.quads_between) + " t=" + std::to_string(s.triples));
  }

  s.t_matrix.assign(r, std::vector<std::uint8_t>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) s.t_matrix[i][j] = (c.sets[i] & c.sets[j]) != 0;
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (s.t_matrix[(i + 1) % r][(j + 1) % r] != s.t_matrix[i][j]) {
        return reject("cyclic shift: row " + std::to_string((i + 1) % r) + " is not the right-shift of row " +
                      std::to_string(i));
      }
    }
  }

  const int usage_cap = (s.quads_between + 1) * s.triples;
  for (int color = 0; color < c.palette; ++color) {
    int used = 0;
    for (ColorSet set : c.sets) used += (set & color_bit(color)) != 0;
    if (used > usage_cap) {
      return reject("colour usage: colour " + std::to_string(color) + " used " + std::to_string(used) +
                    " times, cap (q+1)t = " + std::to_string(usage_cap));
    }
  }

  for (const Block& b : s.blocks) {
    if (b.kind != BlockKind::triple) continue;
    const auto other = detail::parse_blocks(c.sets, b.start, detail::bases_at(c.sets, b.start, c.palette));
    if (!other) return reject("rotation independence: re-reading from vertex " + std::to_string(b.start) + " fails");
    const auto other_gaps = detail::triple_gaps(*other);
    if (static_cast<int>(other_gaps.size()) != s.triples ||
        std::any_of(other_gaps.begin(), other_gaps.end(), [&](int g) { return g != s.quads_between; })) {
      return reject("rotation independence: re-reading from vertex " + std::to_string(b.start) +
                    " changes (q, t)");
    }
  }

  result.structure = std::move(s);
  return result;
}

}  // namespace ofc
