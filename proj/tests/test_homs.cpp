#include <gtest/gtest.h>

#include <random>

#include "braidhom/homs.hpp"
#include "braidhom/json_io.hpp"
#include "test_support.hpp"

using namespace braidhom;
using braidhom::testing::random_word;

namespace {

BraidWord W(int n, std::vector<int> ls) { return BraidWord(n, std::move(ls)); }

Homomorphism verified(Homomorphism h) {
  EXPECT_TRUE(verify_hom(h));
  return h;
}

std::vector<StandardKind> five_families(int k_lo, int k_hi) {
  std::vector<StandardKind> out{StandardKind::Trivial, StandardKind::Inclusion, StandardKind::Diagonal,
                                StandardKind::FlipDiagonal};
  for (int k = k_lo; k <= k_hi; ++k) out.push_back(StandardKind::cabling(k));
  return out;
}

}  // namespace

TEST(StandardHom, LiteralImages) {
  EXPECT_EQ(standard_hom(StandardKind::cabling(2), 5).image(1), W(10, {1, 1, 2, 3, 1, 2}));
  EXPECT_EQ(standard_hom(StandardKind::FlipDiagonal, 5).image(2), W(10, {2, -7}));
  EXPECT_EQ(standard_hom(StandardKind::Diagonal, 5).image(4), W(10, {4, 9}));
  const auto ex = standard_hom(StandardKind::ExceptionalB4B3, 4);
  EXPECT_EQ(ex.target_strands(), 3);
  EXPECT_EQ(ex.images(), (std::vector<BraidWord>{W(3, {1}), W(3, {2}), W(3, {1})}));
  EXPECT_EQ(standard_hom(StandardKind::Inversion, 4).image(3), W(4, {-3}));
  EXPECT_EQ(standard_hom(StandardKind::inner(W(4, {1})), 4).image(2), W(4, {1, 2, -1}));
  const auto triv = standard_hom(StandardKind::Trivial, 5);
  for (const auto& w : triv.images()) EXPECT_TRUE(w.empty());
}

TEST(StandardHom, KindConstraints) {
  EXPECT_THROW(standard_hom(StandardKind::ExceptionalB4B3, 5), std::invalid_argument);
  EXPECT_THROW(standard_hom(StandardKind::Inner, 4), std::invalid_argument);
  EXPECT_THROW(standard_hom(StandardKind::inner(W(5, {1})), 4), std::invalid_argument);
  EXPECT_THROW(Homomorphism(3, 4, {W(4, {1})}), std::invalid_argument);
  EXPECT_THROW(Homomorphism(3, 4, {W(4, {1}), W(5, {1})}), std::invalid_argument);
}

TEST(VerifyHom, StandardMapsAreHomomorphisms) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& kind : five_families(-3, 3)) {
      auto h = standard_hom(kind, n);
      EXPECT_FALSE(h.verified());
      EXPECT_TRUE(verify_hom(h)) << to_string(kind) << " n=" << n;
      EXPECT_TRUE(h.verified());
    }
    auto inv = standard_hom(StandardKind::Inversion, n);
    EXPECT_TRUE(verify_hom(inv));
  }
  auto ex = standard_hom(StandardKind::ExceptionalB4B3, 4);
  EXPECT_TRUE(verify_hom(ex));
}

TEST(VerifyHom, ConstantAndBrokenMaps) {
  Homomorphism constant(5, 5, std::vector<BraidWord>(4, W(5, {1})));
  EXPECT_TRUE(verify_hom(constant));

  Homomorphism broken(5, 5, {W(5, {1}), W(5, {2}), W(5, {1}), W(5, {2})});
  EXPECT_FALSE(verify_hom(broken));
  EXPECT_FALSE(broken.verified());
  const auto fail = failing_relation(broken);
  ASSERT_TRUE(fail);
  // (1,2) and (1,3) hold; the first failure is the far commutation (1,4).
  EXPECT_EQ(fail->i, 1);
  EXPECT_EQ(fail->j, 4);
  EXPECT_FALSE(fail->braid);
}

TEST(VerifyHom, UndecidedNamesTheRelation) {
  auto h = standard_hom(StandardKind::cabling(3), 5);
  try {
    verify_hom(h, Fuel{5});
    FAIL() << "expected undecided";
  } catch (const undecided_error& e) {
    EXPECT_NE(std::string(e.what()).find("relation (1,2)"), std::string::npos);
  }
}

TEST(ApplyHom, Examples) {
  EXPECT_EQ(apply_hom(inclusion_hom(5, 10), alpha1(5)), W(10, {1, 2, 3, 4}));
  EXPECT_TRUE(apply_hom(trivial_hom(5, 10), W(5, {1, -2, 3})).empty());
  EXPECT_TRUE(apply_hom(standard_hom(StandardKind::ExceptionalB4B3, 4), W(4, {1, -3})).empty());
  EXPECT_THROW(apply_hom(inclusion_hom(5, 10), W(4, {1})), std::invalid_argument);
}

TEST(ApplyHom, IsMultiplicative) {
  std::mt19937_64 rng(3);
  for (const auto& kind : five_families(-2, 2)) {
    const auto h = standard_hom(kind, 4);
    for (int r = 0; r < 10; ++r) {
      const auto u = random_word(rng, 4, 8), v = random_word(rng, 4, 8);
      EXPECT_TRUE(words_equal(apply_hom(h, u * v), apply_hom(h, u) * apply_hom(h, v)));
    }
  }
}

TEST(Transvect, Examples) {
  const auto inc = verified(inclusion_hom(5, 10));
  const auto by_z = transvect(inc, center_z(10));
  EXPECT_EQ(by_z.image(2), W(10, {2}) * center_z(10));
  auto copy = by_z;
  EXPECT_TRUE(verify_hom(copy));

  const auto by_s9 = transvect(inc, W(10, {9}));
  EXPECT_EQ(by_s9.image(1), W(10, {1, 9}));

  try {
    transvect(inc, W(10, {5}));
    FAIL() << "expected a centralizer failure";
  } catch (const centralizer_error& e) {
    EXPECT_EQ(e.generator(), 4);
  }
}

TEST(Transvect, MatchesTheTransvectionFormula) {
  std::mt19937_64 rng(9);
  for (const auto& kind : five_families(-2, 2)) {
    const auto h = verified(standard_hom(kind, 4));
    for (const auto& t : centralizer_generators(kind, 4)) {
      const auto ht = transvect(h, t);
      for (int r = 0; r < 3; ++r) {
        const auto w = random_word(rng, 4, 6);
        const int L = static_cast<int>(exponent_sum(w));
        EXPECT_TRUE(words_equal(apply_hom(ht, w), apply_hom(h, w) * t.pow(L)));
      }
    }
  }
}

TEST(Compose, Examples) {
  auto a = inclusion_hom(5, 7), b = inclusion_hom(7, 10);
  EXPECT_EQ(compose_hom(b, a), inclusion_hom(5, 10));
  EXPECT_THROW(compose_hom(a, b), std::invalid_argument);

  auto ex = verified(standard_hom(StandardKind::ExceptionalB4B3, 4));
  auto back = verified(inclusion_hom(3, 4));
  auto round = compose_hom(back, ex);
  EXPECT_TRUE(round.verified());
  EXPECT_EQ(round.images(), (std::vector<BraidWord>{W(4, {1}), W(4, {2}), W(4, {1})}));

  const auto triv = trivial_hom(5, 10);
  const auto left = compose_hom(triv, inclusion_hom(5, 5));
  for (const auto& w : left.images()) EXPECT_TRUE(w.empty());
  const auto right = compose_hom(standard_hom(StandardKind::cabling(1), 5), trivial_hom(5, 5));
  for (const auto& w : right.images()) EXPECT_TRUE(w.empty());
}

TEST(Centralizer, CatalogShapes) {
  const auto cab = centralizer_generators(StandardKind::cabling(3), 5);
  ASSERT_EQ(cab.size(), 2u);
  EXPECT_EQ(cab[0], center_z(10));
  EXPECT_EQ(cab[1], W(10, {1, 3, 5, 7, 9}));
  const auto flip = centralizer_generators(StandardKind::FlipDiagonal, 5);
  EXPECT_NE(std::find(flip.begin(), flip.end(), center_z(10)), flip.end());
  EXPECT_EQ(centralizer_generators(StandardKind::Trivial, 5).size(), 9u);
  EXPECT_THROW(centralizer_generators(StandardKind::Inversion, 5), std::invalid_argument);
  EXPECT_EQ(cable_crossing(2, 2, 0, 4), W(4, {2, 3, 1, 2}));
}

TEST(Centralizer, GeneratorsCommuteWithImages) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& kind : five_families(-2, 2)) {
      const auto h = standard_hom(kind, n);
      for (const auto& t : centralizer_generators(kind, n))
        for (const auto& img : h.images()) EXPECT_TRUE(commutes(t, img)) << to_string(kind) << " n=" << n;
    }
}

TEST(Fingerprint, RequiresVerification) {
  EXPECT_THROW(fingerprint(inclusion_hom(5, 10)), precondition_error);
}

TEST(Fingerprint, Examples) {
  const auto triv = fingerprint(verified(trivial_hom(5, 10)));
  EXPECT_TRUE(triv.cyclic_image);
  for (const auto& w : triv.witnesses) EXPECT_TRUE(w.identity_image);

  const auto inc = fingerprint(verified(standard_hom(StandardKind::Inclusion, 5)));
  const auto diag = fingerprint(verified(standard_hom(StandardKind::Diagonal, 5)));
  const auto flip = fingerprint(verified(standard_hom(StandardKind::FlipDiagonal, 5)));
  ASSERT_EQ(inc.witnesses[0].witness, "s1 s2^-1");
  EXPECT_EQ(inc.witnesses[0].cycle_type, (std::vector<int>{3, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(diag.witnesses[0].cycle_type, (std::vector<int>{3, 3, 1, 1, 1, 1}));
  EXPECT_FALSE(diag.sign_bipartition);
  EXPECT_TRUE(flip.sign_bipartition);
  EXPECT_FALSE(inc.cyclic_image);
  // a1 s1 a1^-1 = s2, so the last witness is trivial in B_n itself.
  EXPECT_TRUE(inc.witnesses.back().identity_image);
}

TEST(Fingerprint, SeparatesTheStandardFamilies) {
  std::vector<Fingerprint> fps;
  const auto kinds = five_families(-2, 2);
  for (const auto& kind : kinds) fps.push_back(fingerprint(verified(standard_hom(kind, 5))));
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j)
      EXPECT_FALSE(fingerprints_match(fps[i], fps[j])) << to_string(kinds[i]) << " vs " << to_string(kinds[j]);
}

TEST(Fingerprint, InvariantUnderEquivalenceMoves) {
  std::mt19937_64 rng(21);
  const auto inversion = verified(standard_hom(StandardKind::Inversion, 10));
  for (const auto& kind : five_families(-1, 1)) {
    const auto h = verified(standard_hom(kind, 5));
    const auto f = fingerprint(h);
    for (const auto& t : centralizer_generators(kind, 5)) EXPECT_EQ(fingerprint(transvect(h, t)), f);
    for (int r = 0; r < 3; ++r) {
      const auto inner = verified(standard_hom(StandardKind::inner(random_word(rng, 10, 6)), 10));
      EXPECT_EQ(fingerprint(compose_hom(inner, h)), f) << to_string(kind);
    }
    EXPECT_EQ(fingerprint(compose_hom(inversion, h)), mirrored(f));
    EXPECT_TRUE(fingerprints_match(fingerprint(compose_hom(inversion, h)), f));
  }
}

TEST(Fingerprint, MatchStandard) {
  const auto h = verified(transvect(verified(standard_hom(StandardKind::cabling(2), 4)), center_z(8)));
  EXPECT_EQ(match_standard(h), (std::vector<std::string>{"cabling(k=2)"}));
  EXPECT_TRUE(match_standard(verified(inclusion_hom(4, 5))).empty());
}

TEST(Json, RoundTrip) {
  const auto h = standard_hom(StandardKind::cabling(2), 3);
  const auto j = to_json(h);
  EXPECT_EQ(j.dump(), R"({"images":[[1,1,2,3,1,2],[3,3,4,5,3,4]],"source_strands":3,"target_strands":6})");
  EXPECT_EQ(parse_hom(j.dump()), h);
  EXPECT_THROW(parse_hom("{"), std::invalid_argument);
  EXPECT_THROW(parse_hom(R"({"images":[[1]],"source_strands":3,"target_strands":6})"), std::invalid_argument);
  EXPECT_THROW(parse_hom(R"({"images":[[0],[1]],"source_strands":3,"target_strands":6})"), std::invalid_argument);
}
