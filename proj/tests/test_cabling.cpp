#include <gtest/gtest.h>

#include <random>

#include "braidhom/cabling.hpp"
#include "test_support.hpp"

using namespace braidhom;
using braidhom::testing::random_word;

namespace {

BraidWord W(int n, std::vector<int> ls) { return BraidWord(n, std::move(ls)); }

Homomorphism verified(Homomorphism h) {
  EXPECT_TRUE(verify_hom(h));
  return h;
}

SemidirectElement random_element(std::mt19937_64& rng, const CableStructure& cs, int ext_len) {
  std::uniform_int_distribution<int> twist(-4, 4);
  SemidirectElement e{random_word(rng, cs.cables(), ext_len), {}};
  for (int j = 1; j <= cs.cables(); ++j) e.interiors.push_back(BraidWord::generator(2, 1, twist(rng)));
  return e;
}

}  // namespace

TEST(CableStructure, ShapeAndText) {
  const CableStructure cs({2, 3, 1});
  EXPECT_EQ(cs.cables(), 3);
  EXPECT_EQ(cs.strands(), 6);
  EXPECT_EQ(cs.offset(3), 5);
  EXPECT_EQ(cs.cable_of(4), 2);
  EXPECT_EQ(to_string(cs), "P: 2 3 1");
  EXPECT_EQ(parse_cable_structure("P: 2 2 2 2 2"), CableStructure::pairs(5));
  EXPECT_THROW(parse_cable_structure("2 2"), std::invalid_argument);
  EXPECT_THROW(parse_cable_structure("P: 2 -1"), std::invalid_argument);
  EXPECT_THROW(parse_cable_structure("P: 2 0"), std::invalid_argument);
  EXPECT_THROW(parse_cable_structure("P:"), std::invalid_argument);
}

TEST(Cabling, IotaAndBeta) {
  const auto p3 = CableStructure::pairs(3);
  EXPECT_EQ(iota(1, W(2, {1}), p3), W(6, {1}));
  EXPECT_EQ(iota(2, W(2, {1}), p3), W(6, {3}));
  EXPECT_THROW(iota(4, W(2, {1}), p3), std::invalid_argument);
  EXPECT_THROW(iota(1, W(3, {1}), p3), std::invalid_argument);
  EXPECT_EQ(beta(W(2, {1}), CableStructure::pairs(2)), W(4, {2, 3, 1, 2}));
  // beta with k = 0 is the 0-twist cabling.
  for (int i = 1; i < 5; ++i)
    EXPECT_EQ(beta(W(5, {i}), CableStructure::pairs(5)), cabling_image(5, 0, i));
  // Unequal cables may cross only if they end up back in place.
  const CableStructure mixed({1, 2});
  EXPECT_THROW(beta(W(2, {1}), mixed), std::invalid_argument);
  const auto sq = beta(W(2, {1, 1}), mixed);
  EXPECT_TRUE(permutation_of(sq).is_identity());
  EXPECT_EQ(beta(W(2, {-1}), CableStructure::pairs(2)), W(4, {2, 3, 1, 2}).inverse());
}

TEST(Cabling, BetaIsAHomomorphism) {
  std::mt19937_64 rng(4);
  const auto cs = CableStructure::pairs(4);
  for (int r = 0; r < 30; ++r) {
    const auto u = random_word(rng, 4, 8), v = random_word(rng, 4, 8);
    EXPECT_TRUE(words_equal(beta(u * v, cs), beta(u, cs) * beta(v, cs)));
  }
  const CableStructure mixed({1, 2, 2, 1});
  for (int r = 0; r < 10; ++r) {
    const auto u = random_word(rng, 4, 6);
    EXPECT_TRUE(words_equal(beta(u * u.inverse(), mixed), BraidWord(6)));
  }
}

TEST(Cabling, EmbedExamples) {
  const auto cs = CableStructure::pairs(2);
  const BraidWord e2(2), s1(2, {1});
  EXPECT_EQ(embed_F({W(2, {1}), {e2, e2}}, cs), W(4, {2, 3, 1, 2}));
  EXPECT_EQ(embed_F({e2, {s1, e2}}, cs), W(4, {1}));
  EXPECT_TRUE(embed_F({e2, {e2, e2}}, cs).empty());
  EXPECT_THROW(embed_F({e2, {s1}}, cs), std::invalid_argument);
}

TEST(Cabling, SemidirectMultiplication) {
  std::mt19937_64 rng(8);
  const auto cs = CableStructure::pairs(2);
  std::uniform_int_distribution<int> twist(-3, 3);
  for (int r = 0; r < 20; ++r) {
    auto g = [&] { return BraidWord::generator(2, 1, twist(rng)); };
    const auto a = g(), b = g(), c = g(), d = g();
    const BraidWord s1(2, {1});
    const auto lhs = embed_F({s1, {a, b}}, cs) * embed_F({s1, {c, d}}, cs);
    const auto rhs = embed_F({s1.pow(2), {a * d, b * c}}, cs);
    EXPECT_TRUE(words_equal(lhs, rhs));
  }
}

TEST(Cabling, ImagesCommute) {
  std::mt19937_64 rng(10);
  const auto cs = CableStructure::pairs(4);
  const BraidWord t(2, {1});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) EXPECT_TRUE(commutes(iota(i, t, cs), iota(j, t, cs)));
  for (int r = 0; r < 10; ++r) {
    const auto u = random_word(rng, 4, 5);
    const auto pure = u.pow(static_cast<int>(permutation_of(u).order()));
    for (int j = 1; j <= 4; ++j) EXPECT_TRUE(commutes(iota(j, t, cs), beta(pure, cs)));
  }
}

TEST(Cabling, InteriorWrithe) {
  const auto p5 = CableStructure::pairs(5);
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(interior_writhe(cabling_image(5, k, 1), 1, p5), k);
  EXPECT_EQ(interior_writhe(beta(W(2, {1}), CableStructure::pairs(2)), 1, CableStructure::pairs(2)), 0);
  EXPECT_EQ(interior_writhe(W(4, {1, 1, 1}), 1, CableStructure::pairs(2)), 3);
  EXPECT_THROW(interior_writhe(W(4, {2}), 1, CableStructure::pairs(2)), precondition_error);
  EXPECT_THROW(interior_writhe(W(5, {1}), 2, CableStructure({2, 3})), precondition_error);
}

TEST(Cabling, ForgetStrands) {
  EXPECT_EQ(forget_strands(W(4, {2, 3, 1, 2}), {true, false, true, false}), W(2, {1}));
  EXPECT_EQ(forget_strands(W(3, {1, 2}), {true, false, true}), W(2, {1}));
  EXPECT_EQ(forget_strands(W(3, {2, 1}), {false, true, true}), W(2, {1}));
}

TEST(Cabling, DecomposeInvertsEmbed) {
  std::mt19937_64 rng(12);
  const auto cs = CableStructure::pairs(5);
  for (int r = 0; r < 100; ++r) {
    const auto e = random_element(rng, cs, 12);
    EXPECT_EQ(decompose(embed_F(e, cs), cs), e);
  }
  for (int i = 1; i < 5; ++i) {
    SemidirectElement g{W(5, {i}), std::vector<BraidWord>(5, BraidWord(2))};
    const auto back = decompose(embed_F(g, cs), cs);
    EXPECT_TRUE(words_equal(back.exterior, g.exterior));
  }
}

TEST(CrossedVector, Examples) {
  for (int k = -2; k <= 2; ++k) {
    const auto h = standard_hom(StandardKind::cabling(k), 5);
    for (int i = 1; i < 5; ++i) {
      std::vector<long> want(5, 0);
      want[static_cast<std::size_t>(i - 1)] = k;
      EXPECT_EQ(crossed_vector(h, W(5, {i})), want);
    }
  }
  const auto h0 = verified(standard_hom(StandardKind::cabling(0), 5));
  std::mt19937_64 rng(2);
  for (int r = 0; r < 10; ++r) EXPECT_EQ(crossed_vector(h0, random_word(rng, 5, 10)), std::vector<long>(5, 0));

  const auto ht = transvect(h0, cable_half_twists(5));
  for (int i = 1; i < 5; ++i) EXPECT_EQ(crossed_vector(ht, W(5, {i, i})), std::vector<long>(5, 2));
  EXPECT_THROW(crossed_vector(inclusion_hom(5, 10), W(5, {1})), precondition_error);
}

TEST(CrossedVector, SquarePatternAndEquivariance) {
  std::mt19937_64 rng(6);
  const int n = 5;
  for (int k = -2; k <= 2; ++k) {
    const auto h = verified(transvect(verified(standard_hom(StandardKind::cabling(k), n)), cable_half_twists(n).pow(3)));
    for (int i = 1; i < n; ++i) {
      const auto sq = crossed_vector(h, W(n, {i, i}));
      for (int c = 1; c <= n; ++c) {
        const long want = (c == i || c == i + 1) ? k + 6 : 6;
        EXPECT_EQ(sq[static_cast<std::size_t>(c - 1)], want);
      }
      for (int r = 0; r < 3; ++r) {
        const auto g = random_word(rng, n, 6);
        const auto moved = crossed_vector(h, W(n, {i, i}).conjugated_by(g));
        const auto perm = permutation_of(g);
        for (int c = 1; c <= n; ++c)
          EXPECT_EQ(moved[static_cast<std::size_t>(c - 1)], sq[static_cast<std::size_t>(perm(c) - 1)]);
      }
    }
  }
}

TEST(Classify, StandardMaps) {
  for (int n = 3; n <= 5; ++n)
    for (int k = -3; k <= 3; ++k) {
      const auto c = classify_cabling(verified(standard_hom(StandardKind::cabling(k), n)));
      EXPECT_EQ(c.k_canonical, k);
      EXPECT_TRUE(c.certified);
      EXPECT_EQ(c.transvection_exponent, 0);
      EXPECT_EQ(c.center_exponent, 0);
      EXPECT_EQ(c.conjugator_exponents, std::vector<long>(static_cast<std::size_t>(n), 0));
    }
}

TEST(Classify, TransvectedAndConjugated) {
  const auto h0 = verified(standard_hom(StandardKind::cabling(0), 5));
  const auto t = classify_cabling(transvect(h0, cable_half_twists(5)));
  EXPECT_EQ(t.x, 2);
  EXPECT_EQ(t.y, 2);
  EXPECT_EQ(t.k_canonical, 0);
  EXPECT_TRUE(t.certified);

  const auto h1 = verified(standard_hom(StandardKind::cabling(1), 5));
  const auto inner = verified(standard_hom(StandardKind::inner(W(10, {1})), 10));
  const auto c = classify_cabling(compose_hom(inner, h1));
  EXPECT_EQ(c.k_canonical, 1);
  EXPECT_TRUE(c.certified);
  EXPECT_NE(c.conjugator_exponents, std::vector<long>(5, 0));
  for (int i = 1; i < 5; ++i) {
    const auto K = [&](int cab, int g) {
      return c.interior_matrix[static_cast<std::size_t>(cab - 1)][static_cast<std::size_t>(g - 1)];
    };
    EXPECT_EQ(c.conjugator_exponents[static_cast<std::size_t>(i)] - c.conjugator_exponents[static_cast<std::size_t>(i - 1)] +
                  K(i + 1, i) - c.x / 2,
              0);
  }

  for (int s = -2; s <= 2; ++s) {
    const auto z = classify_cabling(transvect(h1, center_z(10).pow(s)));
    EXPECT_EQ(z.k_canonical, 1);
    EXPECT_EQ(z.center_exponent, -s);
    EXPECT_TRUE(z.certified);
  }
}

TEST(Classify, RejectsNonCablings) {
  EXPECT_THROW(classify_cabling(verified(standard_hom(StandardKind::Diagonal, 4))), precondition_error);
  EXPECT_THROW(classify_cabling(verified(standard_hom(StandardKind::Inclusion, 4))), precondition_error);
  EXPECT_THROW(classify_cabling(standard_hom(StandardKind::cabling(1), 4)), precondition_error);
  // A transvection by one cable's twist breaks the section form (odd x).
  const auto h = verified(standard_hom(StandardKind::cabling(1), 4));
  const auto central = verified(transvect(h, center_z(8)));
  EXPECT_NO_THROW(classify_cabling(central));
}
