#include <gtest/gtest.h>

#include <random>

#include "braidhom/lamination.hpp"
#include "test_support.hpp"

using namespace braidhom;
using braidhom::testing::random_word;

namespace {

LaminationCoords random_lamination(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::int64_t> d(-5, 5);
  while (true) {
    std::vector<std::int64_t> a, b;
    for (int i = 0; i < n - 2; ++i) {
      a.push_back(d(rng));
      b.push_back(d(rng));
    }
    LaminationCoords L(n, a, b);
    if (!L.is_zero()) return L;
  }
}

BraidWord W(int n, std::vector<int> ls) { return BraidWord(n, std::move(ls)); }

}  // namespace

TEST(Lamination, ShapeIsChecked) {
  EXPECT_THROW(LaminationCoords(4, std::vector<std::int64_t>{1}, std::vector<std::int64_t>{1, 2}),
               std::invalid_argument);
  EXPECT_THROW(standard_curve_coords(2, 1), std::invalid_argument);
  EXPECT_THROW(standard_curve_coords(5, 5), std::invalid_argument);
  EXPECT_THROW(standard_curve_coords(5, 0), std::invalid_argument);
}

TEST(Lamination, StandardCurvesAreFixedByTheirHalfTwist) {
  for (int n = 3; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      auto c = standard_curve_coords(n, i);
      EXPECT_FALSE(c.is_zero());
      EXPECT_EQ(apply_word(c, BraidWord::generator(n, i)), c);
      EXPECT_EQ(apply_word(c, BraidWord::generator(n, i, -1)), c);
      if (i + 1 < n) {
        EXPECT_EQ(apply_word(apply_word(c, W(n, {i + 1})), W(n, {-(i + 1)})), c);
      }
      // Far generators fix c_i; adjacent ones move it.
      for (int j = 1; j < n; ++j) {
        bool moved = !(apply_word(c, BraidWord::generator(n, j)) == c);
        EXPECT_EQ(moved, std::abs(i - j) == 1) << "n=" << n << " c" << i << " sigma" << j;
      }
    }
}

TEST(Lamination, RoundCurvesOfB4Differ) {
  EXPECT_FALSE(standard_curve_coords(4, 1) == standard_curve_coords(4, 3));
  EXPECT_EQ(standard_curve_coords(4, 1).to_string(), "L4: 0 0 | 1 0");
  EXPECT_EQ(standard_curve_coords(4, 3).to_string(), "L4: 0 0 | 0 -1");
}

TEST(Lamination, RotationCarriesRoundCurvesForward) {
  // alpha_1 carries c_i to c_{i+1} as a mapping class; with letters applied
  // left to right that is the action of alpha_1^-1.
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i + 1 < n; ++i) {
      auto c = standard_curve_coords(n, i);
      EXPECT_EQ(push_forward(c, alpha1(n)), standard_curve_coords(n, i + 1));
      EXPECT_EQ(apply_word(c, alpha1(n).inverse()), standard_curve_coords(n, i + 1));
    }
  EXPECT_FALSE(apply_word(standard_curve_coords(5, 1), alpha1(5)) == standard_curve_coords(5, 2));
}

TEST(Lamination, IdentityAndBraidRelation) {
  std::mt19937_64 rng(31);
  for (int n = 3; n <= 7; ++n)
    for (int t = 0; t < 200; ++t) {
      auto L = random_lamination(rng, n);
      EXPECT_EQ(apply_word(L, BraidWord(n)), L);
      if (n >= 3) {
        auto moved = apply_word(L, W(n, {1, 2, 1}));
        EXPECT_EQ(apply_word(moved, W(n, {2, 1, 2}).inverse()), L);
      }
    }
}

TEST(Lamination, RelationInvariance) {
  std::mt19937_64 rng(37);
  for (int n = 3; n <= 7; ++n)
    for (int t = 0; t < 200; ++t) {
      auto L = random_lamination(rng, n);
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (j - i >= 2)
            EXPECT_EQ(apply_word(L, W(n, {i, j})), apply_word(L, W(n, {j, i})));
          else
            EXPECT_EQ(apply_word(L, W(n, {i, j, i})), apply_word(L, W(n, {j, i, j})));
        }
    }
}

TEST(Lamination, ActionProperty) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + t % 5;
    auto L = random_lamination(rng, n);
    auto u = random_word(rng, n, 20), v = random_word(rng, n, 20);
    EXPECT_EQ(apply_word(L, u * v), apply_word(apply_word(L, u), v));
  }
}

TEST(Lamination, CenterActsTrivially) {
  std::mt19937_64 rng(43);
  for (int n = 3; n <= 7; ++n) {
    for (const auto& L : default_family(n)) EXPECT_EQ(apply_word(L, center_z(n)), L);
    for (int t = 0; t < 100; ++t) {
      auto L = random_lamination(rng, n);
      EXPECT_EQ(apply_word(L, center_z(n)), L);
    }
  }
}

TEST(Lamination, StrandMismatch) {
  EXPECT_THROW(apply_word(standard_curve_coords(4, 1), W(5, {1})), std::invalid_argument);
  auto fam = default_family(4);
  EXPECT_THROW(mod_center_equal(W(4, {1}), W(5, {1}), fam), std::invalid_argument);
}

TEST(Lamination, ModCenterEquality) {
  for (int n = 3; n <= 7; ++n) {
    auto fam = default_family(n);
    EXPECT_TRUE(mod_center_equal(center_z(n), BraidWord(n), fam));
    EXPECT_FALSE(mod_center_equal(W(n, {1}), W(n, {2}), fam));
    EXPECT_TRUE(mod_center_equal(alpha1(n), alpha1(n), fam));
  }
  std::vector<LaminationCoords> c1{standard_curve_coords(5, 1)};
  EXPECT_FALSE(mod_center_equal(W(5, {1}), W(5, {2}), c1));
  EXPECT_THROW(mod_center_equal(W(5, {1}), W(5, {2}), std::span<const LaminationCoords>{}),
               std::invalid_argument);
}

TEST(Lamination, CommutatorOfSquaresIsDetected) {
  auto w = W(3, {1, 1, 2, 2, -1, -1, -2, -2});
  EXPECT_EQ(exponent_sum(w), 0);
  EXPECT_TRUE(permutation_of(w).is_identity());
  EXPECT_TRUE(moves_some(w, default_family(3)));
  EXPECT_FALSE(apply_word(standard_curve_coords(3, 1), w) == standard_curve_coords(3, 1));
}

TEST(Lamination, OverflowEscalatesToBigIntegers) {
  // (sigma_1 sigma_2^-1)^k is pseudo-Anosov; coordinates grow like phi^(2k).
  auto w = W(3, {1, -2}).pow(60);
  auto L = apply_word(standard_curve_coords(3, 1), w);
  EXPECT_TRUE(L.wide());
  EXPECT_EQ(apply_word(L, w.inverse()), standard_curve_coords(3, 1));
  EXPECT_FALSE(apply_word(L, w.inverse()).wide());
  // Split the word: the action property must survive the escalation.
  auto half = W(3, {1, -2}).pow(30);
  EXPECT_EQ(apply_word(apply_word(standard_curve_coords(3, 1), half), half), L);
}

TEST(Lamination, DefaultFamilyIsDeduplicated) {
  auto fam = default_family(5);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) EXPECT_FALSE(fam[i] == fam[j]);
  EXPECT_EQ(fam.front(), standard_curve_coords(5, 1));
}

TEST(CrossCheck, BackendsAgreeOnRandomWords) {
  std::mt19937_64 rng(47);
  for (int n = 3; n <= 7; ++n) {
    auto fam = default_family(n);
    for (int t = 0; t < 200; ++t) {
      auto w = random_word(rng, n, 40);
      auto r = cross_check_trivial(w, fam);
      EXPECT_FALSE(r.conflict()) << w.length();
      // Nontriviality certificates must be honoured by handle reduction.
      if (r.lamination_moves) {
        EXPECT_FALSE(r.handle_trivial);
      }
    }
  }
}

TEST(CrossCheck, TrivialWordsFixTheFamily) {
  std::mt19937_64 rng(53);
  for (int n = 3; n <= 7; ++n) {
    auto fam = default_family(n);
    for (int t = 0; t < 50; ++t) {
      auto u = random_word(rng, n, 15), v = random_word(rng, n, 15);
      // [u, v] with v replaced by a word commuting with u's conjugate is hard to
      // sample; instead build trivial words from relators.
      auto rel = W(n, {1, 2, 1, -2, -1, -2}).conjugated_by(u);
      auto r = cross_check_trivial(rel * v * v.inverse(), fam);
      EXPECT_TRUE(r.handle_trivial);
      EXPECT_FALSE(r.conflict());
    }
  }
}
