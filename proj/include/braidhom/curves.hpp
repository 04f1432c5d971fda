#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidhom/braid_word.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/lamination.hpp"
#include "braidhom/parallel.hpp"
#include "braidhom/word_problem.hpp"

namespace braidhom {

/// The curve w(c_i): the image of the round curve around punctures i, i+1
/// under the braid w. Its half-twist is w sigma_i w^-1.
struct CurveSpec {
  int strands = 2;
  int base = 1;
  BraidWord conjugator{2};

  CurveSpec() = default;
  CurveSpec(int n, int i, BraidWord w) : strands(n), base(i), conjugator(std::move(w)) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("curve base index out of range");
    if (conjugator.strands() != n) throw std::invalid_argument("conjugator has the wrong strand count");
  }
  static CurveSpec standard(int n, int i) { return CurveSpec(n, i, BraidWord(n)); }

  /// g(c): prepend g to the conjugator.
  CurveSpec moved_by(const BraidWord& g) const { return CurveSpec(strands, base, g * conjugator); }

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

enum class Disjointness { Equal, Disjoint, Intersecting };

inline const char* to_string(Disjointness d) {
  switch (d) {
    case Disjointness::Equal: return "Equal";
    case Disjointness::Disjoint: return "Disjoint";
    case Disjointness::Intersecting: return "Intersecting";
  }
  return "?";
}

inline BraidWord half_twist_word(const CurveSpec& c) {
  return BraidWord::generator(c.strands, c.base).conjugated_by(c.conjugator);
}

/// Always a pure braid.
inline BraidWord dehn_twist_word(const CurveSpec& c) { return half_twist_word(c).pow(2); }

/// Dynnikov coordinates of the curve (n >= 3); a complete invariant of the
/// isotopy class.
inline LaminationCoords curve_coords(const CurveSpec& c) {
  return push_forward(standard_curve_coords(c.strands, c.base), c.conjugator);
}

inline void require_same_strands(const CurveSpec& c, const CurveSpec& d) {
  if (c.strands != d.strands) throw std::invalid_argument("curves live on different disks");
}

inline bool curves_equal(const CurveSpec& c, const CurveSpec& d, Fuel fuel = {}) {
  require_same_strands(c, d);
  return words_equal(half_twist_word(c), half_twist_word(d), fuel);
}

/// Equal if the half-twists agree; otherwise Disjoint iff the Dehn twists
/// commute (twists about two curves commute exactly when the curves have zero
/// geometric intersection).
inline Disjointness curves_disjoint(const CurveSpec& c, const CurveSpec& d, Fuel fuel = {}) {
  require_same_strands(c, d);
  if (curves_equal(c, d, fuel)) return Disjointness::Equal;
  return commutes(dehn_twist_word(c), dehn_twist_word(d), fuel) ? Disjointness::Disjoint
                                                                 : Disjointness::Intersecting;
}

/// How harness reports decide disjointness.
enum class DisjointnessMethod {
  WordProblem,          ///< curves_disjoint as is
  LaminationPrefilter,  ///< certify Intersecting when T_c moves d, else fall back to the word problem
};

inline Disjointness curves_disjoint(const CurveSpec& c, const CurveSpec& d, DisjointnessMethod method,
                                    Fuel fuel = {}) {
  if (method == DisjointnessMethod::LaminationPrefilter && c.strands >= 3) {
    require_same_strands(c, d);
    // If the twists commuted, T_c would fix d; so a moved d certifies a
    // nonzero intersection.
    const auto dc = curve_coords(d);
    if (!(push_forward(dc, dehn_twist_word(c)) == dc)) return Disjointness::Intersecting;
  }
  return curves_disjoint(c, d, fuel);
}

/// Pairwise disjoint curves, duplicates removed.
class Multicurve {
 public:
  explicit Multicurve(const std::vector<CurveSpec>& curves, Fuel fuel = {}) {
    for (const auto& c : curves) {
      bool duplicate = false;
      for (const auto& d : components_) {
        const auto v = curves_disjoint(c, d, fuel);
        if (v == Disjointness::Intersecting)
          throw std::invalid_argument("multicurve components must be disjoint");
        if (v == Disjointness::Equal) duplicate = true;
      }
      if (!duplicate) components_.push_back(c);
    }
  }
  const std::vector<CurveSpec>& components() const noexcept { return components_; }

 private:
  std::vector<CurveSpec> components_;
};

/// Freely reduced words of length <= max_len in shortlex order.
inline std::vector<BraidWord> enumerate_words(int n, int max_len) {
  std::vector<BraidWord> out{BraidWord(n)};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      const auto prefix = out[k].letters();
      for (int g = 1; g < n; ++g)
        for (int l : {g, -g}) {
          if (!prefix.empty() && prefix.back() == -l) continue;
          std::vector<int> ls(prefix.begin(), prefix.end());
          ls.push_back(l);
          out.emplace_back(n, std::move(ls));
        }
    }
    layer_begin = layer_end;
  }
  return out;
}

/// All curves w(c_i) with |w| <= max_conj, one representative per isotopy
/// class (the first in base-then-shortlex order).
inline std::vector<CurveSpec> enumerate_curves(int n, int max_conj) {
  std::set<LaminationCoords> seen;
  std::vector<CurveSpec> out;
  const auto words = enumerate_words(n, max_conj);
  for (int i = 1; i < n; ++i)
    for (const auto& w : words) {
      CurveSpec c(n, i, w);
      if (seen.insert(curve_coords(c)).second) out.push_back(std::move(c));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Rotation harnesses

/// alpha_1 (k = 1) or alpha_2 (k = 2).
inline BraidWord rotation(int n, int k) {
  if (k == 1) return alpha1(n);
  if (k == 2) return alpha2(n);
  throw std::invalid_argument("rotation index must be 1 or 2");
}

struct RotationRow {
  std::size_t curve = 0;
  int power = 0;  ///< signed power of the rotation
  std::optional<Disjointness> verdict;  ///< empty when undecided
};

struct RotationReport {
  int n = 0;
  int k = 0;
  std::size_t curves = 0;
  std::vector<RotationRow> rows;
  std::vector<std::size_t> counterexamples;  ///< indices into rows
  std::size_t undecided = 0;
};

/// For every curve c and e = +-1, the verdict for (c, alpha_k^e(c)); any
/// verdict other than Intersecting is a counterexample.
inline RotationReport rotation_intersection_report(int n, int k, const std::vector<CurveSpec>& curves,
                                                   DisjointnessMethod method = DisjointnessMethod::WordProblem,
                                                   Fuel fuel = {}, unsigned threads = default_threads()) {
  if (n < 3) throw std::invalid_argument("rotation report needs n >= 3");
  const BraidWord rot = rotation(n, k);
  const BraidWord rot_inv = rot.inverse();
  auto verdicts = parallel_map(
      std::span<const CurveSpec>(curves),
      [&](const CurveSpec& c) {
        std::array<std::optional<Disjointness>, 2> v;
        for (int s = 0; s < 2; ++s) {
          try {
            v[static_cast<std::size_t>(s)] = curves_disjoint(c, c.moved_by(s == 0 ? rot : rot_inv), method, fuel);
          } catch (const undecided_error&) {
          }
        }
        return v;
      },
      threads);
  RotationReport rep;
  rep.n = n;
  rep.k = k;
  rep.curves = curves.size();
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (int s = 0; s < 2; ++s) {
      RotationRow row{i, s == 0 ? 1 : -1, verdicts[i][static_cast<std::size_t>(s)]};
      if (!row.verdict)
        ++rep.undecided;
      else if (*row.verdict != Disjointness::Intersecting)
        rep.counterexamples.push_back(rep.rows.size());
      rep.rows.push_back(row);
    }
  return rep;
}

enum class RotationHypothesis { Alpha1Range, Alpha2Range };

struct MulticurveReport {
  int n = 0;
  RotationHypothesis hypothesis = RotationHypothesis::Alpha1Range;
  std::vector<int> powers;
  std::size_t curves = 0;
  std::vector<RotationRow> rows;                ///< (curve, power, verdict of c vs rot^power(c))
  std::vector<std::size_t> satisfying;          ///< curves meeting the hypothesis on their own
  std::size_t disjoint_pairs = 0;               ///< distinct disjoint pairs of satisfying curves
  std::vector<std::pair<std::size_t, std::size_t>> counterexamples;  ///< pairs whose union meets it
  std::size_t undecided = 0;
};

/// Powers i for which the hypothesis asks i(M, rot^i(M)) = 0.
inline std::vector<int> hypothesis_powers(int n, RotationHypothesis h) {
  std::vector<int> ps;
  if (h == RotationHypothesis::Alpha1Range) {
    if (n < 5) throw std::invalid_argument("the alpha_1 range hypothesis needs n >= 5");
    for (int i = 2; i <= n - 2; ++i) ps.push_back(i);
  } else {
    if (n < 6) throw std::invalid_argument("the alpha_2 range hypothesis needs n >= 6");
    for (int i = 2; i <= n - 3; ++i) ps.push_back(i);
  }
  return ps;
}

/// Searches the given single curves for a multicurve with two components that
/// meets the rotation-disjointness hypothesis. Each curve is first tested on
/// its own; every disjoint pair of satisfying curves is then tested as the
/// multicurve {c, d} against all cross pairs (x, rot^i(y)). A pair passing
/// that test would contradict the claim that only single two-point curves
/// satisfy the hypothesis, and is recorded as a counterexample. Curves in the
/// family are all two-point curves, so a satisfying single curve is
/// consistent with the claim.
inline MulticurveReport rotation_multicurve_report(int n, RotationHypothesis h,
                                                   const std::vector<CurveSpec>& curves,
                                                   DisjointnessMethod method = DisjointnessMethod::WordProblem,
                                                   Fuel fuel = {}, unsigned threads = default_threads()) {
  MulticurveReport rep;
  rep.n = n;
  rep.hypothesis = h;
  rep.powers = hypothesis_powers(n, h);
  rep.curves = curves.size();
  const BraidWord rot = rotation(n, h == RotationHypothesis::Alpha1Range ? 1 : 2);
  std::vector<BraidWord> rot_powers;
  for (int p : rep.powers) rot_powers.push_back(rot.pow(p));

  auto zero_intersection = [](const std::optional<Disjointness>& v) {
    return v && *v != Disjointness::Intersecting;
  };

  auto per_curve = parallel_map(
      std::span<const CurveSpec>(curves),
      [&](const CurveSpec& c) {
        std::vector<std::optional<Disjointness>> v;
        for (const auto& rp : rot_powers) {
          try {
            v.emplace_back(curves_disjoint(c, c.moved_by(rp), method, fuel));
          } catch (const undecided_error&) {
            v.emplace_back(std::nullopt);
          }
        }
        return v;
      },
      threads);

  for (std::size_t i = 0; i < curves.size(); ++i) {
    bool ok = true;
    for (std::size_t p = 0; p < rot_powers.size(); ++p) {
      rep.rows.push_back({i, rep.powers[p], per_curve[i][p]});
      if (!per_curve[i][p]) ++rep.undecided;
      ok = ok && zero_intersection(per_curve[i][p]);
    }
    if (ok) rep.satisfying.push_back(i);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < rep.satisfying.size(); ++a)
    for (std::size_t b = a + 1; b < rep.satisfying.size(); ++b)
      pairs.emplace_back(rep.satisfying[a], rep.satisfying[b]);

  // 0: not disjoint, 1: disjoint but union fails, 2: union satisfies, 3: undecided
  auto outcome = parallel_map(
      std::span<const std::pair<std::size_t, std::size_t>>(pairs),
      [&](const std::pair<std::size_t, std::size_t>& pr) -> int {
        const auto& c = curves[pr.first];
        const auto& d = curves[pr.second];
        try {
          if (curves_disjoint(c, d, method, fuel) != Disjointness::Disjoint) return 0;
          for (const auto& rp : rot_powers)
            for (const auto* x : {&c, &d})
              for (const auto* y : {&c, &d})
                if (curves_disjoint(*x, y->moved_by(rp), method, fuel) == Disjointness::Intersecting) return 1;
          return 2;
        } catch (const undecided_error&) {
          return 3;
        }
      },
      threads);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (outcome[i] >= 1 && outcome[i] <= 2) ++rep.disjoint_pairs;
    if (outcome[i] == 2) rep.counterexamples.push_back(pairs[i]);
    if (outcome[i] == 3) ++rep.undecided;
  }
  return rep;
}

}  // namespace braidhom
