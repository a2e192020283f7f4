#include <gtest/gtest.h>

#include <random>

#include "ofc/coloring.hpp"
#include "ofc/random.hpp"
#include "ofc/solver.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ofc;

TEST(VerifyColoring, FigureOneIsValid) {
  EXPECT_FALSE(verify_coloring(directed_cycle(7), fixtures::figure_one()).has_value());
}

TEST(VerifyColoring, TriangleSingletons) {
  const BFoldColoring c{3, 1, {make_color_set({0}), make_color_set({1}), make_color_set({2})}};
  EXPECT_FALSE(verify_coloring(directed_cycle(3), c).has_value());
}

TEST(VerifyColoring, ModifiedFigureOneReportsConcretePair) {
  auto c = fixtures::figure_one();
  // u_4 := {1,3} in the 1-based naming
  c.sets[4] = make_color_set({0, 2});
  const auto g = directed_cycle(7);
  EXPECT_FALSE(oracle::valid_coloring(g, c.sets));
  const auto v = verify_coloring(g, c);
  ASSERT_TRUE(v.has_value());
  // c(u_3) = {6,0} and the new c(u_4) = {0,2} share colour 0 on arc u_3u_4
  EXPECT_EQ(v->kind, ColoringViolation::Kind::shared_color_on_arc);
  EXPECT_EQ(v->first, (Arc{3, 4}));
  EXPECT_NE(c.sets[v->first.tail] & c.sets[v->first.head], 0u);
  EXPECT_FALSE(v->describe(c).empty());
}

TEST(VerifyColoring, SharedColourOnArcComesFirst) {
  const BFoldColoring c{3, 1, {make_color_set({0}), make_color_set({0}), make_color_set({1})}};
  const auto v = verify_coloring(directed_path(3), c);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ColoringViolation::Kind::shared_color_on_arc);
  EXPECT_EQ(v->first, (Arc{0, 1}));
}

TEST(VerifyColoring, TwoPathEndsMustBeDisjoint) {
  // b = 1: endpoints of a directed 2-path sharing a colour is rejected by the
  // generic pair rule alone
  const BFoldColoring c{2, 1, {make_color_set({0}), make_color_set({1}), make_color_set({0})}};
  const auto v = verify_coloring(directed_path(3), c);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ColoringViolation::Kind::opposing_arcs);
  EXPECT_EQ(v->first, (Arc{0, 1}));
  EXPECT_EQ(v->second, (Arc{1, 2}));
}

TEST(VerifyColoring, MalformedInputThrows) {
  const auto g = directed_cycle(3);
  EXPECT_THROW(verify_coloring(g, BFoldColoring{3, 1, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(verify_coloring(g, BFoldColoring{3, 1, {1, 2, 6}}), std::invalid_argument);
  EXPECT_THROW(verify_coloring(g, BFoldColoring{3, 1, {1, 2, 8}}), std::invalid_argument);
}

TEST(VerifyColoring, AgreesWithDoubleLoopOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = random_oriented_graph(rng, 3 + trial % 4);
    const int k = 3 + static_cast<int>(rng() % 4);
    const int b = 1 + static_cast<int>(rng() % 2);
    const auto subsets = detail::all_subsets(k, b);
    BFoldColoring c{k, b, {}};
    for (int v = 0; v < g.vertex_count(); ++v) c.sets.push_back(subsets[rng() % subsets.size()]);
    EXPECT_EQ(is_valid_coloring(g, c), oracle::valid_coloring(g, c.sets));
  }
}

TEST(Ratio, LowestTerms) {
  EXPECT_EQ(ratio(BFoldColoring{7, 2, {}}), Rational(7, 2));
  EXPECT_EQ(ratio(BFoldColoring{3, 1, {}}), Rational(3));
  const Rational r = ratio(BFoldColoring{14, 4, {}});
  EXPECT_EQ(r.numerator(), 7);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(to_string(r), "7/2");
}

TEST(RationalText, ParseAndFormat) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("4/8"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(to_string(Rational(17, 4)), "17/4");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
}

// Homomorphisms pull colourings back: if phi: G -> H and c colours H, then
// c ∘ phi colours G.
TEST(PullBack, ComposesWithHomomorphisms) {
  int checked = 0;
  for (const auto& [from, to] : random_pairs(17, 60)) {
    const auto hom = hom_exists(from, to);
    if (hom.outcome != Outcome::exists) continue;
    ASSERT_TRUE(is_homomorphism(from, to, *hom.map));
    for (int b = 1; b <= 2; ++b) {
      const auto colour = chi_b(to, b);
      ASSERT_EQ(colour.outcome, Outcome::exists);
      EXPECT_TRUE(is_valid_coloring(from, pull_back(*colour.certificate, *hom.map)));
    }
    ++checked;
  }
  EXPECT_GE(checked, 25);
}
