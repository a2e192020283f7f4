#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofc/coloring.hpp"
#include "ofc/graph.hpp"
#include "ofc/rational.hpp"

namespace ofc {

// Exceeding either limit turns a search into Outcome::inconclusive.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes = 100'000'000;
  std::optional<std::chrono::duration<double>> time_limit;

  static SearchBudget unlimited() { return {std::nullopt, std::nullopt}; }
};

enum class Outcome { exists, not_exists, inconclusive };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::exists: return "exists";
    case Outcome::not_exists: return "not-exists";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace detail {

class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Counts one search node; false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes) exhausted_ = true;
    if (budget_.time_limit && (nodes_ & 1023U) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Breadth-first order from vertex 0 along out-arcs, so a directed cycle is
// visited in its natural order. In-neighbours are taken only once the
// out-arc frontier is exhausted, which keeps each weakly connected component
// contiguous; further components restart at their smallest vertex.
inline std::vector<Vertex> bfs_order(const OrientedGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = order.size();
    std::size_t back = order.size();
    order.push_back(root);
    while (head < order.size()) {
      for (; head < order.size(); ++head) {
        for (Vertex w : g.out_neighbors(order[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
        }
      }
      for (; back < order.size() && head == order.size(); ++back) {
        for (Vertex w : g.in_neighbors(order[back])) {
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
        }
      }
    }
  }
  return order;
}

// For each position in `order`, the arcs joining that vertex to earlier ones.
inline std::vector<std::vector<Arc>> back_arcs(const OrientedGraph& g, std::span<const Vertex> order) {
  std::vector<int> position(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<std::vector<Arc>> out(order.size());
  for (const Arc& a : g.arcs()) {
    out[std::max(position[a.tail], position[a.head])].push_back(a);
  }
  return out;
}

// All b-subsets of {0..k-1} in lexicographic order of their sorted elements.
inline std::vector<ColorSet> all_subsets(int k, int b) {
  std::vector<ColorSet> out;
  std::vector<int> pick(b);
  for (int i = 0; i < b; ++i) pick[i] = i;
  while (true) {
    ColorSet s = 0;
    for (int c : pick) s |= color_bit(c);
    out.push_back(s);
    int i = b - 1;
    while (i >= 0 && pick[i] == k - b + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < b; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// The lowest `count` bits of `mask`.
inline ColorSet lowest_bits(ColorSet mask, int count) {
  ColorSet out = 0;
  for (; count > 0; --count) {
    const ColorSet bit = mask & (~mask + 1);
    out |= bit;
    mask &= mask - 1;
  }
  return out;
}

// Backtracking over per-vertex b-subsets. Condition (ii) is maintained as a
// registry of colour pairs (a, c) such that some assigned arc has a on its
// tail and c on its head; an arc pair violates (ii) exactly when both (a, c)
// and (c, a) are registered.
//
// Vertices sharing a colour are pairwise unrelated (no arc, no 2-path), so a
// colour may sit on at most alpha_o vertices; that caps each colour's usage.
//
// With `canonical` set, colours not yet used anywhere are interchangeable, so
// a candidate only takes the lowest fresh colours. That keeps one colouring
// per orbit, which is enough to decide existence but not to enumerate.
class FoldSearch {
 public:
  FoldSearch(const OrientedGraph& g, int fold, int palette, const SearchBudget& budget, bool canonical,
             bool usage_bound = true)
      : canonical_(canonical),
        fold_(fold),
        palette_(palette),
        meter_(budget),
        order_(bfs_order(g)),
        back_(back_arcs(g, order_)),
        candidates_(all_subsets(palette, fold)),
        assignment_(g.vertex_count(), 0),
        cap_(usage_bound && g.vertex_count() <= kMaxBitsetVertices ? alpha_o(g).size : g.vertex_count()),
        usage_(palette, 0),
        pair_count_(static_cast<std::size_t>(palette) * palette, 0),
        forward_(palette, 0) {}

  // Calls visit(assignment) for every colouring found, in search order,
  // until visit returns false. Returns true if the space was exhausted.
  bool run(const std::function<bool(const std::vector<ColorSet>&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    const auto n = static_cast<std::int64_t>(order_.size());
    if (n * fold_ > static_cast<std::int64_t>(palette_) * cap_) {
      refuted_by_count_ = true;
      return true;
    }
    descend(0);
    return !stopped_ && !meter_.exhausted();
  }

  const BudgetMeter& meter() const noexcept { return meter_; }
  // true when n * b > k * alpha_o settled the question before branching
  bool refuted_by_count() const noexcept { return refuted_by_count_; }

 private:
  bool arc_fits(ColorSet tail, ColorSet head) const {
    if ((tail & head) != 0) return false;
    for (ColorSet rest = head; rest != 0; rest &= rest - 1) {
      if ((forward_[std::countr_zero(rest)] & tail) != 0) return false;
    }
    return true;
  }

  void record(ColorSet tail, ColorSet head, int delta) {
    for (ColorSet t = tail; t != 0; t &= t - 1) {
      const int a = std::countr_zero(t);
      for (ColorSet h = head; h != 0; h &= h - 1) {
        const int c = std::countr_zero(h);
        auto& count = pair_count_[static_cast<std::size_t>(a) * palette_ + c];
        count += delta;
        if (count == 0) {
          forward_[a] &= ~color_bit(c);
        } else {
          forward_[a] |= color_bit(c);
        }
      }
    }
  }

  void use(ColorSet set, int delta) {
    for (; set != 0; set &= set - 1) {
      const int a = std::countr_zero(set);
      usage_[a] += delta;
      if (usage_[a] >= cap_) {
        full_ |= color_bit(a);
      } else {
        full_ &= ~color_bit(a);
      }
    }
  }

  void descend(std::size_t pos) {
    if (pos == order_.size()) {
      if (!(*visit_)(assignment_)) stopped_ = true;
      return;
    }
    const Vertex v = order_[pos];
    const auto& arcs = back_[pos];
    const ColorSet root = fold_ == kMaxPalette ? ~ColorSet{0} : color_bit(fold_) - 1;
    const ColorSet used = used_;
    for (ColorSet candidate : candidates_) {
      if (pos == 0 && candidate != root) continue;
      if (canonical_) {
        const ColorSet fresh = candidate & ~used;
        if (fresh != lowest_bits(~used, std::popcount(fresh))) continue;
      }
      if ((candidate & full_) != 0) continue;
      if (!meter_.tick()) return;
      assignment_[v] = candidate;
      used_ = used | candidate;
      use(candidate, +1);
      std::size_t placed = 0;
      for (; placed < arcs.size(); ++placed) {
        const ColorSet tail = assignment_[arcs[placed].tail];
        const ColorSet head = assignment_[arcs[placed].head];
        if (!arc_fits(tail, head)) break;
        record(tail, head, +1);
      }
      if (placed == arcs.size()) descend(pos + 1);
      for (std::size_t i = placed; i-- > 0;) {
        record(assignment_[arcs[i].tail], assignment_[arcs[i].head], -1);
      }
      use(candidate, -1);
      assignment_[v] = 0;
      used_ = used;
      if (stopped_ || meter_.exhausted()) return;
    }
  }

  bool canonical_;
  int fold_;
  int palette_;
  BudgetMeter meter_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Arc>> back_;
  std::vector<ColorSet> candidates_;
  std::vector<ColorSet> assignment_;
  int cap_;
  std::vector<int> usage_;
  std::vector<std::uint32_t> pair_count_;
  std::vector<ColorSet> forward_;
  ColorSet full_ = 0;
  ColorSet used_ = 0;
  const std::function<bool(const std::vector<ColorSet>&)>* visit_ = nullptr;
  bool stopped_ = false;
  bool refuted_by_count_ = false;
};

inline void check_fold_parameters(int fold, int palette) {
  if (fold < 1 || fold > palette) {
    throw std::invalid_argument("need 1 <= b <= k, got b=" + std::to_string(fold) + " k=" + std::to_string(palette));
  }
  if (palette > kMaxPalette) {
    throw std::invalid_argument("palette " + std::to_string(palette) + " exceeds 64 colours");
  }
}

}  // namespace detail

struct FoldSearchResult {
  Outcome outcome = Outcome::inconclusive;
  std::optional<BFoldColoring> certificate;
  std::uint64_t nodes = 0;
  bool by_counting = false;
};

// Does g admit a b-fold oriented k-colouring? Colour symmetry is broken, so
// the first vertex in BFS order always gets {0..b-1}. Turning off
// `usage_bound` leaves plain backtracking, for cross-checking.
inline FoldSearchResult exists_bfold(const OrientedGraph& g, int fold, int palette,
                                     const SearchBudget& budget = {}, bool usage_bound = true) {
  detail::check_fold_parameters(fold, palette);
  detail::FoldSearch search(g, fold, palette, budget, true, usage_bound);
  std::optional<BFoldColoring> found;
  const bool complete = search.run([&](const std::vector<ColorSet>& sets) {
    found = BFoldColoring{palette, fold, sets};
    return false;
  });
  FoldSearchResult result;
  result.nodes = search.meter().nodes();
  result.by_counting = search.refuted_by_count();
  if (found) {
    result.outcome = Outcome::exists;
    result.certificate = std::move(found);
  } else {
    result.outcome = complete ? Outcome::not_exists : Outcome::inconclusive;
  }
  return result;
}

struct FoldEnumeration {
  bool complete = false;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

// Visits every b-fold k-colouring with the root set fixed to {0..b-1}.
inline FoldEnumeration for_each_bfold(const OrientedGraph& g, int fold, int palette, const SearchBudget& budget,
                                      const std::function<void(const BFoldColoring&)>& visit) {
  detail::check_fold_parameters(fold, palette);
  detail::FoldSearch search(g, fold, palette, budget, false);
  FoldEnumeration result;
  result.complete = search.run([&](const std::vector<ColorSet>& sets) {
    ++result.count;
    visit(BFoldColoring{palette, fold, sets});
    return true;
  });
  result.nodes = search.meter().nodes();
  return result;
}

struct Probe {
  int fold = 0;
  int palette = 0;
  Outcome outcome = Outcome::inconclusive;
};

struct ChromaticResult {
  // exists: `value` is exact and `certificate` attains it
  Outcome outcome = Outcome::inconclusive;
  int value = 0;
  std::optional<BFoldColoring> certificate;
  std::vector<Probe> probes;
};

// Smallest k admitting a b-fold k-colouring, ascending from b * omega_ro(g).
inline ChromaticResult chi_b(const OrientedGraph& g, int fold, const SearchBudget& budget = {}) {
  if (fold < 1) throw std::invalid_argument("fold must be >= 1, got " + std::to_string(fold));
  ChromaticResult result;
  const int start = std::max(fold, fold * omega_ro(g).size);
  // b * |V| colours always suffice (pairwise disjoint sets)
  const int ceiling = std::max(fold, fold * g.vertex_count());
  if (start > kMaxPalette || std::min(ceiling, kMaxPalette) < start) {
    throw std::invalid_argument("b-fold search would need more than 64 colours");
  }
  for (int k = start; k <= std::min(ceiling, kMaxPalette); ++k) {
    FoldSearchResult probe = exists_bfold(g, fold, k, budget);
    result.probes.push_back({fold, k, probe.outcome});
    if (probe.outcome == Outcome::exists) {
      result.outcome = Outcome::exists;
      result.value = k;
      result.certificate = std::move(probe.certificate);
      return result;
    }
    if (probe.outcome == Outcome::inconclusive) {
      result.outcome = Outcome::inconclusive;
      result.value = k;
      return result;
    }
  }
  throw std::invalid_argument("b-fold search would need more than 64 colours");
}

// Oriented chromatic number.
inline ChromaticResult chi_o(const OrientedGraph& g, const SearchBudget& budget = {}) {
  return chi_b(g, 1, budget);
}

struct HomResult {
  Outcome outcome = Outcome::inconclusive;
  std::optional<std::vector<Vertex>> map;
  std::uint64_t nodes = 0;
};

// Backtracking search for a homomorphism from -> to.
inline HomResult hom_exists(const OrientedGraph& from, const OrientedGraph& to, const SearchBudget& budget = {}) {
  const int n = from.vertex_count();
  const int m = to.vertex_count();
  const auto order = detail::bfs_order(from);
  const auto back = detail::back_arcs(from, order);
  std::vector<char> arc(static_cast<std::size_t>(m) * m, 0);
  for (const Arc& a : to.arcs()) arc[static_cast<std::size_t>(a.tail) * m + a.head] = 1;

  detail::BudgetMeter meter(budget);
  std::vector<Vertex> image(n, -1);
  bool found = false;
  std::function<void(std::size_t)> descend = [&](std::size_t pos) {
    if (pos == order.size()) {
      found = true;
      return;
    }
    const Vertex v = order[pos];
    for (Vertex target = 0; target < m; ++target) {
      if (!meter.tick()) return;
      image[v] = target;
      const bool fits = std::all_of(back[pos].begin(), back[pos].end(), [&](const Arc& a) {
        return arc[static_cast<std::size_t>(image[a.tail]) * m + image[a.head]] != 0;
      });
      if (fits) descend(pos + 1);
      if (found || meter.exhausted()) return;
    }
    image[v] = -1;
  };
  descend(0);

  HomResult result;
  result.nodes = meter.nodes();
  if (found) {
    result.outcome = Outcome::exists;
    result.map = std::move(image);
  } else {
    result.outcome = meter.exhausted() ? Outcome::inconclusive : Outcome::not_exists;
  }
  return result;
}

enum class LowerSource { clique, counting };

inline std::string to_string(LowerSource s) { return s == LowerSource::clique ? "clique" : "counting"; }

struct BoundReport {
  std::string graph_id;
  int omega_ro = 0;
  int alpha_o = 0;
  Rational lower{0};
  LowerSource lower_source = LowerSource::clique;
  std::optional<Rational> upper;
  std::optional<BFoldColoring> upper_certificate;
  // oriented chromatic number, when the 1-fold search was conclusive
  std::optional<int> chi_o;
  std::vector<Probe> probes;

  bool conclusive() const {
    return std::none_of(probes.begin(), probes.end(),
                        [](const Probe& p) { return p.outcome == Outcome::inconclusive; });
  }
};

// lower = max(omega_ro, |V| / alpha_o); upper = min over b <= b_max of chi_b / b.
inline BoundReport bound_sweep(const OrientedGraph& g, int max_fold, const SearchBudget& budget = {},
                               std::string graph_id = {}) {
  if (max_fold < 1) throw std::invalid_argument("b_max must be >= 1, got " + std::to_string(max_fold));
  BoundReport report;
  report.graph_id = std::move(graph_id);
  report.omega_ro = omega_ro(g).size;
  report.alpha_o = alpha_o(g).size;
  report.lower = Rational(report.omega_ro);
  if (report.alpha_o > 0) {
    const Rational counting(g.vertex_count(), report.alpha_o);
    if (counting > report.lower) {
      report.lower = counting;
      report.lower_source = LowerSource::counting;
    }
  }
  for (int b = 1; b <= max_fold; ++b) {
    ChromaticResult r = chi_b(g, b, budget);
    report.probes.insert(report.probes.end(), r.probes.begin(), r.probes.end());
    if (r.outcome != Outcome::exists) continue;
    if (b == 1) report.chi_o = r.value;
    const Rational candidate(r.value, b);
    if (!report.upper || candidate < *report.upper) {
      report.upper = candidate;
      report.upper_certificate = std::move(r.certificate);
    }
  }
  return report;
}

}  // namespace ofc
