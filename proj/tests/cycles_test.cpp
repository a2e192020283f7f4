#include <gtest/gtest.h>

#include "ofc/cycles.hpp"
#include "ofc/solver.hpp"
#include "fixtures.hpp"

using namespace ofc;

TEST(ClassifyPrime, Examples) {
  ASSERT_TRUE(classify_prime(7));
  EXPECT_EQ(classify_prime(7)->kind, PrimeType::Kind::type_a);
  EXPECT_EQ(classify_prime(11)->kind, PrimeType::Kind::type_a);
  EXPECT_EQ(classify_prime(13)->kind, PrimeType::Kind::type_b);
  EXPECT_EQ(classify_prime(5)->kind, PrimeType::Kind::type_b);
  EXPECT_FALSE(classify_prime(9));
  EXPECT_FALSE(classify_prime(3));
  EXPECT_FALSE(classify_prime(2));
  EXPECT_FALSE(classify_prime(1));
}

TEST(Beta, PublishedValues) {
  EXPECT_EQ(beta(28).value, Rational(1, 2));
  EXPECT_EQ(beta(28).witness, 7);
  EXPECT_EQ(beta(35).value, Rational(1, 2));
  EXPECT_EQ(beta(55).value, Rational(1, 3));
  EXPECT_EQ(beta(88).value, Rational(1, 3));
  EXPECT_EQ(beta(88).witness, 11);
  EXPECT_EQ(beta(26).value, Rational(0));
  EXPECT_FALSE(beta(26).witness);
  for (int n = 3; n <= 20; ++n) EXPECT_EQ(beta(1LL << n).value, Rational(0));
  EXPECT_THROW(beta(5), std::invalid_argument);
}

TEST(Beta, LeastTypeAFactorWins) {
  // 77 = 7 * 11 and 19 * 7 = 133
  EXPECT_EQ(beta(77).witness, 7);
  EXPECT_EQ(beta(133).witness, 7);
  EXPECT_EQ(beta(19).value, Rational(1, 5));
  // 65 = 5 * 13, both type B
  EXPECT_EQ(beta(65).value, Rational(0));
}

TEST(CycleValue, Cases) {
  EXPECT_EQ(theorem_value(7).value, Rational(7, 2));
  EXPECT_EQ(theorem_value(7).which, 'd');
  EXPECT_EQ(theorem_value(12).value, Rational(3));
  EXPECT_EQ(theorem_value(12).which, 'a');
  EXPECT_EQ(theorem_value(11).value, Rational(11, 3));
  EXPECT_EQ(theorem_value(11).prime, 11);
  EXPECT_EQ(theorem_value(3).value, Rational(3));
  EXPECT_EQ(theorem_value(4).value, Rational(4));
  EXPECT_EQ(theorem_value(5).value, Rational(5));
  EXPECT_EQ(theorem_value(8).value, Rational(4));
  EXPECT_THROW(theorem_value(2), std::invalid_argument);
}

TEST(CycleValue, ElevenBySearch) {
  const auto c11 = directed_cycle(11);
  const auto yes = exists_bfold(c11, 3, 11);
  ASSERT_EQ(yes.outcome, Outcome::exists);
  EXPECT_TRUE(is_valid_coloring(c11, *yes.certificate));
  EXPECT_EQ(exists_bfold(c11, 3, 10).outcome, Outcome::not_exists);
}

TEST(TypeAConstruction, SevenIsFigureOne) {
  EXPECT_EQ(construct_typeA_coloring(7), fixtures::figure_one());
}

TEST(TypeAConstruction, ValidWithExpectedRatio) {
  for (int r : {7, 11, 14, 22, 28, 35, 55, 77, 88}) {
    const auto c = construct_typeA_coloring(r);
    EXPECT_TRUE(is_valid_coloring(directed_cycle(r), c)) << r;
    EXPECT_EQ(ratio(c), Rational(4) - beta(r).value) << r;
  }
  const auto c28 = construct_typeA_coloring(28);
  EXPECT_EQ(c28.palette, 7);
  EXPECT_EQ(c28.fold, 2);
  for (int x = 0; x < 28; ++x) EXPECT_EQ(c28.sets[x], fixtures::figure_one().sets[x % 7]);
  const auto c22 = construct_typeA_coloring(22);
  EXPECT_EQ(c22.palette, 11);
  EXPECT_EQ(c22.fold, 3);
  EXPECT_EQ(ratio(c22), Rational(11, 3));
}

TEST(TypeAConstruction, Preconditions) {
  EXPECT_THROW(construct_typeA_coloring(8), std::invalid_argument);
  EXPECT_THROW(construct_typeA_coloring(21), std::invalid_argument);
  EXPECT_THROW(construct_typeA_coloring(5), std::invalid_argument);
  EXPECT_THROW(construct_typeA_coloring(26), std::invalid_argument);
}

TEST(AnalyzeMiser, FigureOne) {
  const auto a = analyze_miser(7, fixtures::figure_one());
  ASSERT_TRUE(a.ok()) << a.rejection;
  const auto& s = *a.structure;
  EXPECT_EQ(s.rotation, 0);
  EXPECT_EQ(s.triples, 1);
  EXPECT_EQ(s.quads_between, 1);
  ASSERT_EQ(s.blocks.size(), 2u);
  EXPECT_EQ(s.blocks[0], (Block{BlockKind::triple, 0, 3}));
  EXPECT_EQ(s.blocks[1], (Block{BlockKind::quad, 3, 4}));
  EXPECT_EQ(s.row_string(0), "1001100");
  EXPECT_EQ(s.row_string(1), "0100110");
  EXPECT_EQ(s.set_d, make_color_set({6}));
  // u_4 = {1,2} meets A and B
  EXPECT_EQ(s.pattern[4], meets_a | meets_b);
}

TEST(AnalyzeMiser, EveryTwoFoldSevenColouring) {
  const auto c7 = directed_cycle(7);
  int analysed = 0;
  const auto e = for_each_bfold(c7, 2, 7, SearchBudget::unlimited(), [&](const BFoldColoring& c) {
    const auto a = analyze_miser(7, c);
    ASSERT_TRUE(a.ok()) << a.rejection;
    EXPECT_EQ(7, (4 * a.structure->quads_between + 3) * a.structure->triples);
    ++analysed;
  });
  EXPECT_TRUE(e.complete);
  EXPECT_GT(analysed, 0);
}

TEST(AnalyzeMiser, TypeAColouringsAcrossRotations) {
  for (int r : {11, 14, 22, 28, 35}) {
    const auto base = construct_typeA_coloring(r);
    const int p = base.palette;
    for (int shift = 0; shift < 3; ++shift) {
      BFoldColoring c = base;
      std::rotate(c.sets.begin(), c.sets.begin() + shift, c.sets.end());
      const auto a = analyze_miser(r, c);
      ASSERT_TRUE(a.ok()) << r << ": " << a.rejection;
      EXPECT_EQ(a.structure->quads_between, (p - 3) / 4) << r;
      EXPECT_EQ(a.structure->triples, r / p) << r;
    }
  }
}

TEST(AnalyzeMiser, Preconditions) {
  const auto c7 = directed_cycle(7);
  const auto four = chi_o(c7);
  EXPECT_THROW(analyze_miser(7, *four.certificate), std::invalid_argument);
  auto broken = fixtures::figure_one();
  broken.sets[4] = make_color_set({0, 2});
  EXPECT_THROW(analyze_miser(7, broken), std::invalid_argument);
  EXPECT_THROW(analyze_miser(9, fixtures::figure_one()), std::invalid_argument);
  EXPECT_THROW(analyze_miser(8, fixtures::figure_one()), std::invalid_argument);
}

// Vacuous for r = 8: there is nothing to analyse.
TEST(AnalyzeMiser, NoMiserColouringOfEight) {
  const auto c8 = directed_cycle(8);
  for (int b = 1; b <= 3; ++b) {
    for (int k = b; k < 4 * b; ++k) EXPECT_EQ(exists_bfold(c8, b, k).outcome, Outcome::not_exists) << b << "," << k;
  }
}

// Closed form against exhaustive search: for every r <= 14 with
// r not divisible by 3, beta(r) = 0 iff no miser colouring with b <= 3.
TEST(Beta, ZeroIffNoSmallMiserColouring) {
  for (int r : {7, 8, 10, 11, 13, 14}) {
    const auto c = directed_cycle(r);
    bool miser = false;
    for (int b = 1; b <= 3 && !miser; ++b) {
      for (int k = b; k < 4 * b && !miser; ++k) {
        const auto probe = exists_bfold(c, b, k);
        ASSERT_NE(probe.outcome, Outcome::inconclusive);
        if (probe.outcome == Outcome::exists) {
          miser = true;
          const auto a = analyze_miser(r, *probe.certificate);
          EXPECT_TRUE(a.ok()) << a.rejection;
        }
      }
    }
    EXPECT_EQ(beta(r).value == Rational(0), !miser) << r;
  }
}
