#pragma once

// Reproduction suites shared by the CLI's `suite` subcommand and the
// acceptance test binary.

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidhom/cabling.hpp"
#include "braidhom/curves.hpp"
#include "braidhom/homs.hpp"
#include "braidhom/lamination.hpp"
#include "braidhom/screens.hpp"
#include "braidhom/text_format.hpp"

namespace braidhom::suites {

struct Options {
  Fuel fuel{};
  unsigned threads = default_threads();
};

struct Result {
  bool pass = true;
  std::size_t failures = 0;   ///< counterexamples or failed checks
  std::size_t undecided = 0;
  std::vector<std::string> notes;  ///< human-readable detail, deterministic
  nlohmann::json data = nlohmann::json::object();

  void fail(const std::string& why) {
    pass = false;
    ++failures;
    if (notes.size() < 20) notes.push_back(why);
  }
};

inline BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len), gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> ls;
  for (int r = len_dist(rng); r > 0; --r) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, std::move(ls));
}

// t r t^-1 t' r' t'^-1 with r, r' braid or far-commutation relators.
inline BraidWord relator_product(std::mt19937_64& rng, int n, int conj_len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  BraidWord out(n);
  for (int r = 0; r < 2; ++r) {
    const int i = gen(rng), j = gen(rng);
    BraidWord rel(n);
    if (std::abs(i - j) == 1)
      rel = BraidWord(n, {i, j, i, -j, -i, -j});
    else if (i != j)
      rel = BraidWord(n, {i, j, -i, -j});
    else if (i + 1 < n)
      rel = BraidWord(n, {i, i + 1, i, -(i + 1), -i, -(i + 1)});
    else
      rel = BraidWord(n, {i - 1, i, i - 1, -i, -(i - 1), -i});
    out *= rel.conjugated_by(random_word(rng, n, conj_len));
  }
  return out;
}

inline std::vector<StandardKind> standard_families(int k_lo, int k_hi) {
  std::vector<StandardKind> out{StandardKind::Trivial, StandardKind::Inclusion, StandardKind::Diagonal,
                                StandardKind::FlipDiagonal};
  for (int k = k_lo; k <= k_hi; ++k) out.push_back(StandardKind::cabling(k));
  return out;
}

// 1 -------------------------------------------------------------------------
inline Result relations(const Options& o, int n_lo = 3, int n_hi = 6, int k_max = 3) {
  Result r;
  std::size_t checked = 0;
  auto check = [&](Homomorphism h, const std::string& label) {
    ++checked;
    try {
      if (!verify_hom(h, o.fuel)) r.fail(label + ": " + failing_relation(h, o.fuel)->describe() + " fails");
    } catch (const undecided_error& e) {
      ++r.undecided;
      r.fail(label + ": undecided (" + e.what() + ")");
    }
  };
  for (int n = n_lo; n <= n_hi; ++n) {
    for (const auto& kind : standard_families(-k_max, k_max))
      check(standard_hom(kind, n), to_string(kind) + " n=" + std::to_string(n));
    check(standard_hom(StandardKind::Inversion, n), "inversion n=" + std::to_string(n));
    check(standard_hom(StandardKind::inner(alpha2(n)), n), "inner(alpha2) n=" + std::to_string(n));
  }
  check(standard_hom(StandardKind::ExceptionalB4B3, 4), "exceptional");
  r.data = {{"checked", checked}, {"failures", r.failures}};
  return r;
}

// 2 -------------------------------------------------------------------------
inline Result cross_validation(const Options& o, int words = 1000, int max_len = 40, std::uint64_t seed = 2024) {
  Result r;
  std::mt19937_64 rng(seed);
  nlohmann::json per_n = nlohmann::json::object();
  for (int n = 3; n <= 7; ++n) {
    const auto family = default_family(n);
    std::size_t trivial = 0, conflicts = 0;
    for (int i = 0; i < words; ++i) {
      // Every fourth word is a product of two conjugated relators: trivial,
      // but not freely trivial.
      BraidWord w = random_word(rng, n, max_len);
      if (i % 4 == 0) w = relator_product(rng, n, (max_len - 12) / 4);
      try {
        const auto c = cross_check_trivial(w, family, o.fuel);
        trivial += c.handle_trivial ? 1 : 0;
        if (c.conflict()) {
          ++conflicts;
          r.fail("conflict on " + to_string(w));
        }
      } catch (const undecided_error&) {
        ++r.undecided;
        r.fail("undecided on " + to_string(w));
      }
    }
    per_n[std::to_string(n)] = {{"conflicts", conflicts}, {"trivial", trivial}, {"words", words}};
  }
  r.data = {{"per_n", per_n}, {"undecided", r.undecided}};
  return r;
}

// 3 -------------------------------------------------------------------------
inline Result central_identities(const Options& o) {
  Result r;
  for (int n = 3; n <= 7; ++n) {
    if (!words_equal(alpha1(n).pow(n), alpha2(n).pow(n - 1), o.fuel))
      r.fail("alpha1^n != alpha2^(n-1) for n=" + std::to_string(n));
    for (int i = 1; i < n; ++i)
      if (!commutes(center_z(n), BraidWord::generator(n, i), o.fuel))
        r.fail("z does not commute with sigma_" + std::to_string(i) + " in B" + std::to_string(n));
  }
  r.data = {{"failures", r.failures}};
  return r;
}

// 4 -------------------------------------------------------------------------
inline Result prop31(const Options& o, std::vector<int> ns = {5, 6}, std::vector<int> ks = {1, 2}, int max_conj = 4,
                     DisjointnessMethod method = DisjointnessMethod::WordProblem) {
  Result r;
  nlohmann::json runs = nlohmann::json::array();
  for (int n : ns) {
    const auto curves = enumerate_curves(n, max_conj);
    for (int k : ks) {
      const auto rep = rotation_intersection_report(n, k, curves, method, o.fuel, o.threads);
      r.undecided += rep.undecided;
      for (auto idx : rep.counterexamples) {
        const auto& row = rep.rows[idx];
        r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " e=" + std::to_string(row.power) + " " +
               to_string(curves[row.curve]) + ": " + to_string(*row.verdict));
      }
      if (rep.undecided) r.fail(std::to_string(rep.undecided) + " undecided verdicts");
      runs.push_back({{"counterexamples", rep.counterexamples.size()},
                      {"curves", rep.curves},
                      {"k", k},
                      {"n", n},
                      {"rows", rep.rows.size()},
                      {"undecided", rep.undecided}});
    }
  }
  r.data = {{"max_conj", max_conj}, {"runs", runs}};
  return r;
}

// 5 -------------------------------------------------------------------------
inline Result prop32(const Options& o, int n = 5, RotationHypothesis hyp = RotationHypothesis::Alpha1Range,
                     int max_conj = 4, DisjointnessMethod method = DisjointnessMethod::WordProblem) {
  Result r;
  const auto curves = enumerate_curves(n, max_conj);
  const auto rep = rotation_multicurve_report(n, hyp, curves, method, o.fuel, o.threads);
  r.undecided = rep.undecided;
  for (const auto& [a, b] : rep.counterexamples)
    r.fail("multicurve {" + to_string(curves[a]) + ", " + to_string(curves[b]) + "} satisfies the hypothesis");
  if (rep.undecided) r.fail(std::to_string(rep.undecided) + " undecided verdicts");
  nlohmann::json satisfying = nlohmann::json::array();
  for (auto i : rep.satisfying) satisfying.push_back(to_string(curves[i]));
  r.data = {{"counterexamples", rep.counterexamples.size()},
            {"curves", rep.curves},
            {"disjoint_satisfying_pairs", rep.disjoint_pairs},
            {"hypothesis", hyp == RotationHypothesis::Alpha1Range ? "alpha1" : "alpha2"},
            {"n", n},
            {"powers", rep.powers},
            {"satisfying_curves", satisfying},
            {"undecided", rep.undecided}};
  r.notes.insert(r.notes.begin(),
                 std::to_string(rep.satisfying.size()) + " single curves satisfy the hypothesis; " +
                     std::to_string(rep.disjoint_pairs) + " disjoint pairs of them, none of which satisfies it as a multicurve" +
                     (rep.counterexamples.empty() ? " (no counterexample found)" : ""));
  return r;
}

// 6 -------------------------------------------------------------------------
inline Result lemma61(const Options& o, const CableStructure& cs = CableStructure::pairs(5), int samples = 500,
                      std::uint64_t seed = 61) {
  Result r;
  for (int p : cs.sizes())
    if (p != 2) throw precondition_error("round trip needs cables of size 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> twist(-5, 5);
  for (int s = 0; s < samples; ++s) {
    SemidirectElement e{random_word(rng, cs.cables(), 15), {}};
    for (int j = 1; j <= cs.cables(); ++j) e.interiors.push_back(BraidWord::generator(2, 1, twist(rng)));
    if (!(decompose(embed_F(e, cs), cs) == e)) r.fail("round trip fails on sample " + std::to_string(s));
  }
  // Generators of the semidirect product.
  std::vector<SemidirectElement> gens;
  const std::vector<BraidWord> none(static_cast<std::size_t>(cs.cables()), BraidWord(2));
  for (int j = 1; j < cs.cables(); ++j) gens.push_back({BraidWord::generator(cs.cables(), j), none});
  for (int c = 1; c <= cs.cables(); ++c) {
    auto in = none;
    in[static_cast<std::size_t>(c - 1)] = BraidWord(2, {1});
    gens.push_back({BraidWord(cs.cables()), in});
  }
  for (const auto& g : gens) {
    const auto back = decompose(embed_F(g, cs), cs);
    bool ok = words_equal(back.exterior, g.exterior, o.fuel);
    for (std::size_t j = 0; j < g.interiors.size(); ++j) ok = ok && words_equal(back.interiors[j], g.interiors[j], o.fuel);
    if (!ok) r.fail("generator round trip fails");
  }
  r.data = {{"generators", gens.size()}, {"pattern", to_string(cs)}, {"samples", samples}, {"failures", r.failures}};
  return r;
}

// 7 -------------------------------------------------------------------------
inline Result prop91(const Options& o, int k_max = 3, int n_lo = 3, int n_hi = 5, int inner_samples = 20,
                     std::uint64_t seed = 91) {
  Result r;
  std::mt19937_64 rng(seed);
  std::size_t checked = 0;
  auto expect = [&](const Homomorphism& h, long k, const std::string& label) {
    ++checked;
    try {
      auto hv = h;
      if (!verify_hom(hv, o.fuel)) return r.fail(label + ": not a homomorphism");
      const auto c = classify_cabling(hv, o.fuel);
      if (c.k_canonical != k || !c.certified)
        r.fail(label + ": got k=" + std::to_string(c.k_canonical) + (c.certified ? "" : " uncertified"));
    } catch (const undecided_error& e) {
      ++r.undecided;
      r.fail(label + ": undecided");
    } catch (const precondition_error& e) {
      r.fail(label + ": " + e.what());
    }
  };
  std::uniform_int_distribution<int> twist(-3, 3), rot(-1, 1);
  for (int n = n_lo; n <= n_hi; ++n) {
    const int m = 2 * n;
    const auto cs = CableStructure::pairs(n);
    for (int k = -k_max; k <= k_max; ++k) {
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      auto h = standard_hom(StandardKind::cabling(k), n);
      verify_hom(h, o.fuel);
      expect(h, k, tag + " standard");
      for (int s = -2; s <= 2; ++s) {
        expect(transvect(h, cable_half_twists(n).pow(s), o.fuel), k, tag + " tau^" + std::to_string(s));
        expect(transvect(h, center_z(m).pow(s), o.fuel), k, tag + " z^" + std::to_string(s));
      }
      for (int t = 0; t < inner_samples; ++t) {
        std::vector<long> ms;
        for (int c = 0; c < n; ++c) ms.push_back(twist(rng));
        const BraidWord conj = interior_twists(ms, cs) * beta(center_z(n).pow(rot(rng)), cs);
        auto inner = standard_hom(StandardKind::inner(conj), m);
        verify_hom(inner, o.fuel);
        expect(compose_hom(inner, h), k, tag + " inner #" + std::to_string(t));
      }
    }
  }
  r.data = {{"checked", checked}, {"failures", r.failures}};
  return r;
}

// 8 -------------------------------------------------------------------------
inline Result b4_identities(const Options& o) {
  Result r;
  const auto delta = named(NamedTag::GarsideDelta4, 4);
  const auto s0 = named(NamedTag::Sigma0of4, 4);
  const bool a = words_equal(BraidWord(4, {1}).conjugated_by(delta), BraidWord(4, {3}), o.fuel);
  const bool b = words_equal(BraidWord(4, {2}).conjugated_by(delta), BraidWord(4, {2}), o.fuel);
  const bool c = commutes(delta, s0, o.fuel);
  if (!a) r.fail("Delta s1 Delta^-1 != s3");
  if (!b) r.fail("Delta s2 Delta^-1 != s2");
  if (c) r.fail("Delta commutes with sigma_0");
  r.data = {{"delta_commutes_sigma0", c}, {"delta_s1_is_s3", a}, {"delta_s2_is_s2", b}};
  return r;
}

// 9 -------------------------------------------------------------------------
inline Result divisibility(const Options&, int n_max = 50) {
  Result r;
  using boost::multiprecision::cpp_int;
  std::size_t table_mismatches = 0;
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= 2 * n_max + 10; ++m) {
      const cpp_int d = cpp_int(n) * (n - 1), v = cpp_int(m) * (m - 1);
      const bool want = d == 0 ? v == 0 : v % d == 0;
      if (special_constraint(n, m) != want) ++table_mismatches;
    }
  if (table_mismatches) r.fail(std::to_string(table_mismatches) + " truth-table mismatches against cpp_int");
  nlohmann::json exceptions = nlohmann::json::array();
  for (long n = 5; n <= n_max; ++n)
    for (long m = n + 1; m <= 2 * n; ++m)
      if (!corollary_range_check(n, m)) {
        exceptions.push_back({n, m});
        r.fail("corollary_range_check(" + std::to_string(n) + "," + std::to_string(m) + ") is false: " +
               std::to_string(n * (n - 1)) + " divides " + std::to_string(m * (m - 1)));
      }
  r.data = {{"n_max", n_max}, {"range_exceptions", exceptions}, {"table_mismatches", table_mismatches}};
  return r;
}

// 10 ------------------------------------------------------------------------
inline Result lin_symmetric(const Options& o) {
  Result r;
  nlohmann::json runs = nlohmann::json::array();
  for (int k = 1; k <= 4; ++k) {
    const auto rep = sym_hom_enumerate(5, k, 1'000'000'000'000ull, o.threads);
    if (!rep.all_cyclic()) r.fail("n=5 k=" + std::to_string(k) + ": non-cyclic solution");
    runs.push_back({{"cyclic", rep.cyclic_solutions}, {"k", k}, {"n", 5}, {"solutions", rep.solutions}});
  }
  const auto small = sym_hom_enumerate(3, 3, 1'000'000'000'000ull, o.threads);
  if (small.all_cyclic()) r.fail("n=3 k=3: no non-cyclic solution found");
  runs.push_back({{"cyclic", small.cyclic_solutions}, {"k", 3}, {"n", 3}, {"solutions", small.solutions}});
  r.data = {{"runs", runs}};
  return r;
}

// 11 ------------------------------------------------------------------------
inline Result fingerprints(const Options& o, int n = 5, int moves = 20, std::uint64_t seed = 11) {
  Result r;
  std::mt19937_64 rng(seed);
  const int m = 2 * n;
  const auto kinds = standard_families(-2, 2);
  auto inversion = standard_hom(StandardKind::Inversion, m);
  verify_hom(inversion, o.fuel);
  std::vector<Fingerprint> fps;
  for (const auto& kind : kinds) {
    auto h = standard_hom(kind, n);
    verify_hom(h, o.fuel);
    const auto f = fingerprint(h, o.fuel);
    fps.push_back(f);
    const auto centralizer = centralizer_generators(kind, n);
    std::uniform_int_distribution<std::size_t> pick(0, centralizer.size() - 1);
    std::uniform_int_distribution<int> power(-2, 2);
    for (int t = 0; t < moves; ++t) {
      const int which = t % 3;
      if (which == 0) {
        const auto tv = centralizer[pick(rng)].pow(power(rng)) * centralizer[pick(rng)];
        if (!(fingerprint(transvect(h, tv, o.fuel), o.fuel) == f)) r.fail(to_string(kind) + ": transvection changes it");
      } else if (which == 1) {
        auto inner = standard_hom(StandardKind::inner(random_word(rng, m, 8)), m);
        verify_hom(inner, o.fuel);
        if (!(fingerprint(compose_hom(inner, h), o.fuel) == f)) r.fail(to_string(kind) + ": inner conjugation changes it");
      } else {
        if (!(fingerprint(compose_hom(inversion, h), o.fuel) == mirrored(f)))
          r.fail(to_string(kind) + ": inversion does not mirror it");
      }
    }
  }
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j)
      if (fingerprints_match(fps[i], fps[j])) {
        ++collisions;
        r.fail(to_string(kinds[i]) + " and " + to_string(kinds[j]) + " share a fingerprint");
      }
  r.data = {{"collisions", collisions}, {"maps", kinds.size()}, {"moves_per_map", moves}, {"n", n}};
  return r;
}

// 12 ------------------------------------------------------------------------
inline Result centralizers(const Options& o, int n = 5) {
  Result r;
  std::size_t checked = 0;
  for (const auto& kind : standard_families(-3, 3)) {
    const auto h = standard_hom(kind, n);
    for (const auto& t : centralizer_generators(kind, n))
      for (int i = 1; i < n; ++i) {
        ++checked;
        if (!commutes(t, h.image(i), o.fuel))
          r.fail(to_string(kind) + ": " + to_string(t) + " does not commute with image " + std::to_string(i));
      }
  }
  r.data = {{"checked", checked}, {"failures", r.failures}};
  return r;
}

struct Entry {
  int criterion;
  std::string name;
  std::string summary;
  std::function<Result(const Options&)> run;
  double time_limit_s;  ///< 0 = none
};

inline std::vector<Entry> catalog() {
  return {
      {1, "relations", "verify_hom on every standard map, n in 3..6, k in -3..3", [](const Options& o) { return relations(o); }, 60},
      {2, "cross-validation", "handle reduction vs laminations, 1000 words per n in 3..7", [](const Options& o) { return cross_validation(o); }, 0},
      {3, "central", "alpha1^n = alpha2^(n-1) and z central, n in 3..7", [](const Options& o) { return central_identities(o); }, 0},
      {4, "prop31", "alpha_k^(+-1)(c) meets c for every curve c, k in {1,2}, n in {5,6}, |w| <= 4", [](const Options& o) { return prop31(o); }, 600},
      {5, "prop32", "no two-curve multicurve meets the rotation hypothesis, n = 5, |w| <= 4", [](const Options& o) { return prop32(o); }, 0},
      {6, "lemma61", "decompose(embed_F(e)) = e on P: 2 2 2 2 2", [](const Options& o) { return lemma61(o); }, 0},
      {7, "prop91", "classify_cabling recovers k, n in 3..5, k in -3..3", [](const Options& o) { return prop91(o); }, 0},
      {8, "b4", "Garside identities in B4", [](const Options& o) { return b4_identities(o); }, 0},
      {9, "screen", "divisibility screen and corollary range, n <= 50", [](const Options& o) { return divisibility(o); }, 0},
      {10, "lin", "homomorphisms B5 -> S_k (k <= 4) have cyclic image", [](const Options& o) { return lin_symmetric(o); }, 300},
      {11, "fingerprints", "fingerprints separate the standard maps at n = 5", [](const Options& o) { return fingerprints(o); }, 0},
      {12, "centralizers", "centralizer catalog commutes with images, n = 5", [](const Options& o) { return centralizers(o); }, 0},
  };
}

}  // namespace braidhom::suites
