#include <gtest/gtest.h>

#include "ofc/kneser.hpp"
#include "ofc/random.hpp"
#include "ofc/solver.hpp"
#include "fixtures.hpp"

using namespace ofc;

namespace {

ConsistentSubOrientation two_arcs(int palette, ColorSet x, ColorSet y, ColorSet w, ColorSet z) {
  const std::vector<Arc> arcs{{0, 1}, {2, 3}};
  return make_suborientation(palette, cardinality(x), {x, y, w, z}, arcs);
}

}  // namespace

TEST(Extract, FigureOne) {
  const auto g = directed_cycle(7);
  const auto [sub, map] = extract_suborientation(g, fixtures::figure_one());
  EXPECT_EQ(sub.palette, 7);
  EXPECT_EQ(sub.subset_size, 2);
  ASSERT_EQ(sub.graph.vertex_count(), 7);
  EXPECT_EQ(sub.graph, directed_cycle(7));
  EXPECT_EQ(sub.labels, fixtures::figure_one().sets);
  EXPECT_EQ(sub.graph.label(3), "{0,6}");
  EXPECT_FALSE(verify_consistency(sub).has_value());
  EXPECT_TRUE(is_homomorphism(g, sub.graph, map));
}

TEST(Extract, TriangleOnSingletons) {
  const BFoldColoring c{3, 1, {make_color_set({0}), make_color_set({1}), make_color_set({2})}};
  const auto [sub, map] = extract_suborientation(directed_cycle(3), c);
  EXPECT_EQ(sub.graph, directed_cycle(3));
  EXPECT_FALSE(verify_consistency(sub).has_value());
  EXPECT_TRUE(is_homomorphism(directed_cycle(3), sub.graph, map));
}

TEST(Extract, MergesRepeatedLabels) {
  // C_6 wound twice round a 3-colouring collapses to a triangle
  BFoldColoring c{3, 1, {}};
  for (int i = 0; i < 6; ++i) c.sets.push_back(color_bit(i % 3));
  const auto [sub, map] = extract_suborientation(directed_cycle(6), c);
  EXPECT_EQ(sub.graph.vertex_count(), 3);
  EXPECT_EQ(map, (std::vector<Vertex>{0, 1, 2, 0, 1, 2}));
}

TEST(Extract, RejectsInvalidColouring) {
  auto c = fixtures::figure_one();
  c.sets[4] = make_color_set({0, 2});
  EXPECT_THROW(extract_suborientation(directed_cycle(7), c), std::invalid_argument);
}

TEST(Consistency, DefiningImplication) {
  // x ∩ w = {2} but y ∩ z = ∅: allowed
  const auto ok = two_arcs(8, make_color_set({1, 2}), make_color_set({3, 4}), make_color_set({5, 6}),
                           make_color_set({2, 7}));
  EXPECT_FALSE(verify_consistency(ok).has_value());
  // x ∩ z = {1} and y ∩ w = {3}
  const auto bad = two_arcs(7, make_color_set({1, 2}), make_color_set({3, 4}), make_color_set({3, 5}),
                            make_color_set({1, 6}));
  const auto v = verify_consistency(bad);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ConsistencyViolation::Kind::opposing_arcs);
}

TEST(Consistency, IntersectingArc) {
  const std::vector<Arc> arcs{{0, 1}};
  const auto s = make_suborientation(4, 2, {make_color_set({1, 2}), make_color_set({2, 3})}, arcs);
  const auto v = verify_consistency(s);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ConsistencyViolation::Kind::intersecting_arc);
}

TEST(Consistency, MalformedLabels) {
  const std::vector<Arc> none;
  EXPECT_EQ(verify_consistency(make_suborientation(4, 2, {make_color_set({1, 2}), make_color_set({3})}, none))->kind,
            ConsistencyViolation::Kind::malformed_label);
  EXPECT_EQ(verify_consistency(make_suborientation(3, 1, {make_color_set({5})}, none))->kind,
            ConsistencyViolation::Kind::malformed_label);
  EXPECT_EQ(verify_consistency(make_suborientation(3, 1, {make_color_set({1}), make_color_set({1})}, none))->kind,
            ConsistencyViolation::Kind::duplicate_label);
}

TEST(BlowUp, IdentityAndTriple) {
  const auto sub = extract_suborientation(directed_cycle(7), fixtures::figure_one()).suborientation;
  EXPECT_EQ(blow_up(sub, 1), sub);
  const auto big = blow_up(sub, 3);
  EXPECT_EQ(big.palette, 21);
  EXPECT_EQ(big.subset_size, 6);
  EXPECT_EQ(big.graph, sub.graph);
  EXPECT_FALSE(verify_consistency(big).has_value());
  EXPECT_EQ(big.labels[0], make_color_set({0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(big.labels[3], make_color_set({18, 19, 20, 0, 1, 2}));
}

TEST(BlowUp, SingleArcBlockSubstitution) {
  const std::vector<Arc> arcs{{0, 1}};
  const auto s = make_suborientation(2, 1, {make_color_set({0}), make_color_set({1})}, arcs);
  const auto big = blow_up(s, 2);
  EXPECT_EQ(big.palette, 4);
  EXPECT_EQ(big.subset_size, 2);
  EXPECT_EQ(big.labels, (std::vector<ColorSet>{make_color_set({0, 1}), make_color_set({2, 3})}));
  EXPECT_TRUE(big.graph.has_arc(0, 1));
}

TEST(BlowUp, Errors) {
  const auto sub = extract_suborientation(directed_cycle(7), fixtures::figure_one()).suborientation;
  EXPECT_THROW(blow_up(sub, 0), std::invalid_argument);
  EXPECT_THROW(blow_up(sub, 10), std::invalid_argument);
}

// Round trip on solver certificates: extraction is consistent, the label map
// is a homomorphism, blow-ups stay consistent and compose multiplicatively,
// and anything mapping to the suborientation maps to its blow-up.
TEST(RoundTrip, SolverCertificates) {
  int checked = 0;
  for (const auto& g : random_corpus(23, 40)) {
    for (int b = 1; b <= 2; ++b) {
      const auto r = chi_b(g, b);
      ASSERT_EQ(r.outcome, Outcome::exists);
      const auto [sub, map] = extract_suborientation(g, *r.certificate);
      EXPECT_FALSE(verify_consistency(sub).has_value());
      EXPECT_TRUE(is_homomorphism(g, sub.graph, map));
      EXPECT_TRUE(is_valid_coloring(sub.graph, as_coloring(sub)));
      if (sub.palette * 6 > kMaxPalette) continue;
      const auto two = blow_up(sub, 2);
      EXPECT_FALSE(verify_consistency(two).has_value());
      EXPECT_EQ(blow_up(two, 3), blow_up(sub, 6));
      // same vertex set and arcs, so the label map still is a homomorphism and
      // the blown-up labels colour g with the same ratio
      EXPECT_TRUE(is_homomorphism(g, two.graph, map));
      const auto pulled = pull_back(as_coloring(two), map);
      EXPECT_TRUE(is_valid_coloring(g, pulled));
      EXPECT_EQ(ratio(pulled), ratio(*r.certificate));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}
