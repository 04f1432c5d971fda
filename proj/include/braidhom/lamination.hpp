#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidhom/braid_word.hpp"
#include "braidhom/word_problem.hpp"

namespace braidhom {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

struct overflow_escalation {};

// Checked arithmetic: int64 throws overflow_escalation, BigInt never overflows.
inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw overflow_escalation{};
  return r;
}
inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw overflow_escalation{};
  return r;
}
inline BigInt add(const BigInt& x, const BigInt& y) { return x + y; }
inline BigInt sub(const BigInt& x, const BigInt& y) { return x - y; }

template <class Int>
Int pos(const Int& x) { return x > 0 ? x : Int(0); }
template <class Int>
Int neg(const Int& x) { return x < 0 ? x : Int(0); }

// Dynnikov update for sigma_i^{+1} on (a_1..a_{n-2}, b_1..b_{n-2}); i is
// one-based. The inverse generator is the same map conjugated by a -> -a
// (reflection of the disk in the line through the punctures).
template <class Int>
void positive_generator(std::span<Int> a, std::span<Int> b, int n, int i) {
  if (n < 3) return;
  const auto last = static_cast<std::size_t>(n - 3);
  if (i == 1) {
    Int bp = add(a[0], pos(b[0]));
    Int ap = sub(pos(bp), b[0]);
    a[0] = ap;
    b[0] = bp;
  } else if (i == n - 1) {
    Int bp = add(a[last], neg(b[last]));
    Int ap = sub(neg(bp), b[last]);
    a[last] = ap;
    b[last] = bp;
  } else {
    const auto j = static_cast<std::size_t>(i - 2);
    const Int a0 = a[j], b0 = b[j], a1 = a[j + 1], b1 = b[j + 1];
    const Int c = add(sub(sub(a0, a1), pos(b1)), neg(b0));
    a[j] = sub(sub(a0, pos(b0)), pos(add(pos(b1), c)));
    b[j] = add(b1, neg(c));
    a[j + 1] = sub(sub(a1, neg(b1)), neg(sub(neg(b0), c)));
    b[j + 1] = sub(b0, neg(c));
  }
}

template <class Int>
void negate_all(std::span<Int> a) {
  for (auto& x : a) x = sub(Int(0), x);
}

template <class Int>
void act(std::span<Int> a, std::span<Int> b, int n, int letter) {
  if (letter > 0) {
    positive_generator(a, b, n, letter);
  } else {
    negate_all(a);
    positive_generator(a, b, n, -letter);
    negate_all(a);
  }
}

}  // namespace detail

/// Dynnikov coordinates of an integral lamination (curve system) on the
/// n-punctured disk, n >= 3.
///
/// With the punctures on a horizontal line, a_i is half the difference of the
/// intersection counts with the arcs below and above puncture i+1, and b_i is
/// half the difference of the counts with the vertical lines in gaps i and
/// i+1. The zero vector is the empty lamination.
///
/// Coordinates live in int64 until some update overflows, at which point the
/// whole computation is redone in arbitrary precision.
class LaminationCoords {
 public:
  LaminationCoords(int strands, std::vector<std::int64_t> a, std::vector<std::int64_t> b)
      : strands_(strands), a_(std::move(a)), b_(std::move(b)) {
    check_shape(a_.size(), b_.size());
  }
  LaminationCoords(int strands, std::vector<BigInt> a, std::vector<BigInt> b)
      : strands_(strands), big_a_(std::move(a)), big_b_(std::move(b)), wide_(true) {
    check_shape(big_a_.size(), big_b_.size());
    narrow();
  }

  int strands() const noexcept { return strands_; }
  bool wide() const noexcept { return wide_; }
  std::vector<BigInt> a() const { return wide_ ? big_a_ : widen(a_); }
  std::vector<BigInt> b() const { return wide_ ? big_b_ : widen(b_); }
  bool is_zero() const {
    auto zero = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& x) { return x == 0; }); };
    return wide_ ? zero(big_a_) && zero(big_b_) : zero(a_) && zero(b_);
  }

  /// Letters applied left to right: apply(L, u*v) == apply(apply(L, u), v).
  LaminationCoords apply(const BraidWord& w) const {
    if (w.strands() != strands_)
      throw std::invalid_argument("lamination and braid word have different strand counts");
    if (!wide_) {
      try {
        auto a = a_, b = b_;
        for (int l : w.letters()) detail::act<std::int64_t>(a, b, strands_, l);
        return LaminationCoords(strands_, std::move(a), std::move(b));
      } catch (const detail::overflow_escalation&) {
      }
    }
    auto a = this->a(), b = this->b();
    for (int l : w.letters()) detail::act<BigInt>(a, b, strands_, l);
    return LaminationCoords(strands_, std::move(a), std::move(b));
  }

  friend bool operator==(const LaminationCoords& x, const LaminationCoords& y) {
    if (x.strands_ != y.strands_) return false;
    if (!x.wide_ && !y.wide_) return x.a_ == y.a_ && x.b_ == y.b_;
    return x.a() == y.a() && x.b() == y.b();
  }
  friend bool operator<(const LaminationCoords& x, const LaminationCoords& y) {
    if (x.strands_ != y.strands_) return x.strands_ < y.strands_;
    if (!x.wide_ && !y.wide_) return std::tie(x.a_, x.b_) < std::tie(y.a_, y.b_);
    auto xa = x.a(), ya = y.a();
    if (xa != ya) return xa < ya;
    return x.b() < y.b();
  }

  /// "Ln: a1 .. a_{n-2} | b1 .. b_{n-2}"
  std::string to_string() const {
    std::string s = "L" + std::to_string(strands_) + ":";
    for (const auto& x : a()) s += " " + x.str();
    s += " |";
    for (const auto& x : b()) s += " " + x.str();
    return s;
  }

 private:
  void check_shape(std::size_t na, std::size_t nb) const {
    if (strands_ < 3) throw std::invalid_argument("lamination coordinates need n >= 3");
    const auto want = static_cast<std::size_t>(strands_ - 2);
    if (na != want || nb != want)
      throw std::invalid_argument("lamination coordinate vectors must have length n-2");
  }
  static std::vector<BigInt> widen(const std::vector<std::int64_t>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
  }
  // Back to int64 when everything fits, so equal laminations compare cheaply.
  void narrow() {
    const BigInt lo = std::numeric_limits<std::int64_t>::min();
    const BigInt hi = std::numeric_limits<std::int64_t>::max();
    auto fits = [&](const std::vector<BigInt>& v) {
      return std::all_of(v.begin(), v.end(), [&](const BigInt& x) { return x >= lo && x <= hi; });
    };
    if (!fits(big_a_) || !fits(big_b_)) return;
    a_.clear();
    b_.clear();
    for (const auto& x : big_a_) a_.push_back(static_cast<std::int64_t>(x));
    for (const auto& x : big_b_) b_.push_back(static_cast<std::int64_t>(x));
    big_a_.clear();
    big_b_.clear();
    wide_ = false;
  }

  int strands_;
  std::vector<std::int64_t> a_, b_;
  std::vector<BigInt> big_a_, big_b_;
  bool wide_ = false;
};

inline LaminationCoords apply_word(const LaminationCoords& L, const BraidWord& w) { return L.apply(w); }

/// The image g(L) of L under the mapping class g, with products composed as
/// functions (g h)(L) = g(h(L)). Equal to apply_word(L, g^-1).
inline LaminationCoords push_forward(const LaminationCoords& L, const BraidWord& g) {
  return L.apply(g.inverse());
}

/// The round curve c_i around punctures i and i+1: all a vanish,
/// b_{i-1} = -1 and b_i = 1 (where those indices exist).
inline LaminationCoords standard_curve_coords(int n, int i) {
  if (n < 3) throw std::invalid_argument("lamination coordinates need n >= 3");
  if (i < 1 || i > n - 1) throw std::invalid_argument("curve index out of range");
  std::vector<std::int64_t> a(static_cast<std::size_t>(n - 2), 0), b(a);
  if (i >= 2) b[static_cast<std::size_t>(i - 2)] = -1;
  if (i <= n - 2) b[static_cast<std::size_t>(i - 1)] = 1;
  return LaminationCoords(n, std::move(a), std::move(b));
}

/// Round curves plus their images under every word of length <= 2,
/// deduplicated, in a deterministic order.
inline std::vector<LaminationCoords> default_family(int n) {
  std::set<LaminationCoords> seen;
  std::vector<LaminationCoords> out;
  auto add = [&](const LaminationCoords& L) {
    if (seen.insert(L).second) out.push_back(L);
  };
  std::vector<int> gens;
  for (int i = 1; i < n; ++i) {
    gens.push_back(i);
    gens.push_back(-i);
  }
  for (int i = 1; i < n; ++i) {
    const auto c = standard_curve_coords(n, i);
    add(c);
    for (int g : gens) {
      const auto c1 = c.apply(BraidWord(n, {g}));
      add(c1);
      for (int h : gens) add(c1.apply(BraidWord(n, {h})));
    }
  }
  return out;
}

/// True iff u and v act identically on every member of `family`. A false
/// answer certifies u != v modulo the center; true is evidence only.
inline bool mod_center_equal(const BraidWord& u, const BraidWord& v,
                             std::span<const LaminationCoords> family) {
  if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
  if (family.empty()) throw std::invalid_argument("lamination family must be nonempty");
  return std::all_of(family.begin(), family.end(),
                     [&](const LaminationCoords& L) { return L.apply(u) == L.apply(v); });
}

inline bool moves_some(const BraidWord& w, std::span<const LaminationCoords> family) {
  return std::any_of(family.begin(), family.end(),
                     [&](const LaminationCoords& L) { return !(L.apply(w) == L); });
}

/// Triviality with cheap certificates of nontriviality: a nonzero exponent
/// sum or a moved round curve. A trivial verdict comes from handle reduction.
inline bool is_trivial_screened(const BraidWord& w, Fuel fuel = {}) {
  if (w.empty()) return true;
  if (exponent_sum(w) != 0) return false;
  if (w.strands() >= 3)
    for (int i = 1; i < w.strands(); ++i) {
      const auto c = standard_curve_coords(w.strands(), i);
      if (!(c.apply(w) == c)) return false;
    }
  return is_trivial(w, fuel);
}

inline bool words_equal_screened(const BraidWord& u, const BraidWord& v, Fuel fuel = {}) {
  return is_trivial_screened(u * v.inverse(), fuel);
}

/// Verdicts of both word-problem backends on one word.
struct TrivialityCrossCheck {
  bool handle_trivial = false;   ///< authoritative verdict
  bool lamination_moves = false; ///< some family member is moved
  long exponent_sum = 0;
  /// Lamination verdict: trivial iff nothing moves and the exponent sum vanishes.
  bool lamination_trivial() const { return !lamination_moves && exponent_sum == 0; }
  bool conflict() const { return handle_trivial != lamination_trivial(); }
};

inline TrivialityCrossCheck cross_check_trivial(const BraidWord& w,
                                                std::span<const LaminationCoords> family,
                                                Fuel fuel = {}) {
  TrivialityCrossCheck r;
  r.handle_trivial = is_trivial(w, fuel);
  r.exponent_sum = exponent_sum(w);
  r.lamination_moves = w.strands() >= 3 && moves_some(w, family);
  return r;
}

}  // namespace braidhom
