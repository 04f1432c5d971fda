#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidhom {

/// A freely reduced word in the Artin generators of B_n.
///
/// Letter j > 0 stands for sigma_j, j < 0 for sigma_|j|^-1. Words are read
/// left to right: in `u * v` the letters of u happen first. Every constructor
/// and operation leaves the word freely reduced.
class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("braid word needs at least one strand");
  }

  BraidWord(int strands, std::vector<int> letters) : BraidWord(strands) {
    for (int l : letters) check_letter(l);
    letters_ = std::move(letters);
    free_reduce();
  }

  static BraidWord generator(int strands, int i, int exponent = 1) {
    BraidWord w(strands);
    w.check_letter(i);
    w.letters_.assign(static_cast<std::size_t>(std::abs(exponent)), exponent < 0 ? -i : i);
    return w;
  }

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Concatenation followed by free reduction.
  BraidWord operator*(const BraidWord& rhs) const {
    require_same_strands(rhs);
    BraidWord out(*this);
    out.append(rhs.letters_);
    return out;
  }
  BraidWord& operator*=(const BraidWord& rhs) {
    require_same_strands(rhs);
    append(rhs.letters_);
    return *this;
  }

  BraidWord inverse() const {
    BraidWord out(strands_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
  }

  BraidWord pow(int e) const {
    BraidWord base = e < 0 ? inverse() : *this;
    BraidWord out(strands_);
    for (int r = 0; r < std::abs(e); ++r) out.append(base.letters_);
    return out;
  }

  /// u * this * u^-1
  BraidWord conjugated_by(const BraidWord& u) const { return u * *this * u.inverse(); }

  /// Same letters on more strands (the standard inclusion B_n -> B_m).
  BraidWord widened(int strands) const {
    if (strands < strands_) throw std::invalid_argument("cannot narrow a braid word");
    BraidWord out(strands);
    out.letters_ = letters_;
    return out;
  }

  /// Letters shifted by `offset`, on `strands` strands.
  BraidWord shifted(int offset, int strands) const {
    std::vector<int> ls;
    ls.reserve(letters_.size());
    for (int l : letters_) ls.push_back(l > 0 ? l + offset : l - offset);
    return BraidWord(strands, std::move(ls));
  }

  /// Literal equality of reduced letter sequences; group equality is words_equal().
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord& a, const BraidWord& b) {
    if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  void check_letter(int l) const {
    if (l == 0 || std::abs(l) >= strands_)
      throw std::invalid_argument("letter " + std::to_string(l) + " out of range for B" +
                                  std::to_string(strands_));
  }
  void require_same_strands(const BraidWord& o) const {
    if (o.strands_ != strands_)
      throw std::invalid_argument("strand count mismatch: B" + std::to_string(strands_) +
                                  " vs B" + std::to_string(o.strands_));
  }
  void append(std::span<const int> ls) {
    for (int l : ls) {
      if (!letters_.empty() && letters_.back() == -l)
        letters_.pop_back();
      else
        letters_.push_back(l);
    }
  }
  void free_reduce() {
    std::vector<int> raw = std::move(letters_);
    letters_.clear();
    append(raw);
  }

  int strands_ = 1;
  std::vector<int> letters_;
};

/// Exponent sum; the abelianization B_n -> Z.
inline long exponent_sum(const BraidWord& w) {
  long s = 0;
  for (int l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

/// Permutation of {1..size}; stored zero-based.
///
/// For a braid, image(i) is the end position of the strand that starts at
/// position i (letters applied left to right).
class Permutation {
 public:
  explicit Permutation(int size = 1) : map_(static_cast<std::size_t>(size)) {
    std::iota(map_.begin(), map_.end(), 0);
  }

  /// From one-based images: images[i-1] = image of i.
  static Permutation from_images(std::span<const int> images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i] - 1;
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
      p.map_[i] = v;
    }
    return p;
  }

  static Permutation transposition(int size, int i, int j) {
    Permutation p(size);
    std::swap(p.map_[static_cast<std::size_t>(i - 1)], p.map_[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  int size() const noexcept { return static_cast<int>(map_.size()); }
  /// One-based image.
  int operator()(int i) const { return map_.at(static_cast<std::size_t>(i - 1)) + 1; }

  /// Left-to-right product: first *this, then `next`.
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
    Permutation out(size());
    for (std::size_t i = 0; i < map_.size(); ++i)
      out.map_[i] = next.map_[static_cast<std::size_t>(map_[i])];
    return out;
  }

  Permutation inverse() const {
    Permutation out(size());
    for (std::size_t i = 0; i < map_.size(); ++i) out.map_[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] != static_cast<int>(i)) return false;
    return true;
  }

  /// Cycle lengths in non-increasing order, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t i = 0; i < map_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(map_[j])) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  long order() const {
    long o = 1;
    for (int c : cycle_type()) o = std::lcm(o, static_cast<long>(c));
    return o;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

inline Permutation permutation_of(const BraidWord& w) {
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));  // position -> strand
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (int l : w.letters()) {
    auto j = static_cast<std::size_t>(std::abs(l));
    std::swap(strand_at[j - 1], strand_at[j]);
  }
  std::vector<int> image(strand_at.size());
  for (std::size_t pos = 0; pos < strand_at.size(); ++pos)
    image[static_cast<std::size_t>(strand_at[pos] - 1)] = static_cast<int>(pos) + 1;
  return Permutation::from_images(image);
}

/// Signed crossing counts between strands, strands labelled by start position.
///
/// The count for a fixed pair is a braid invariant (unchanged by both braid
/// relations and by free cancellation). For pure braids it is twice the
/// linking number. Returned as a symmetric n x n matrix, zero-based.
inline std::vector<std::vector<long>> crossing_matrix(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  std::vector<std::size_t> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), std::size_t{0});
  for (int l : w.letters()) {
    auto j = static_cast<std::size_t>(std::abs(l));
    std::size_t s = strand_at[j - 1], t = strand_at[j];
    long sign = l > 0 ? 1 : -1;
    m[s][t] += sign;
    m[t][s] += sign;
    std::swap(strand_at[j - 1], strand_at[j]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Named elements

enum class NamedTag { Alpha1, Alpha2, CenterZ, GarsideDelta4, Sigma0of4 };

/// alpha_1 = sigma_1 sigma_2 ... sigma_{n-1}
inline BraidWord alpha1(int n) {
  std::vector<int> ls(static_cast<std::size_t>(n - 1));
  std::iota(ls.begin(), ls.end(), 1);
  return BraidWord(n, std::move(ls));
}

/// alpha_2 = sigma_1^2 sigma_2 ... sigma_{n-1}
inline BraidWord alpha2(int n) {
  return BraidWord::generator(n, 1) * alpha1(n);
}

/// z = alpha_1^n, the generator of the center.
inline BraidWord center_z(int n) { return alpha1(n).pow(n); }

inline BraidWord named(NamedTag tag, int n) {
  switch (tag) {
    case NamedTag::Alpha1:
    case NamedTag::Alpha2:
    case NamedTag::CenterZ:
      if (n < 2) throw std::invalid_argument("alpha_1, alpha_2 and z need at least 2 strands");
      if (tag == NamedTag::Alpha1) return alpha1(n);
      if (tag == NamedTag::Alpha2) return alpha2(n);
      return center_z(n);
    case NamedTag::GarsideDelta4:
      if (n != 4) throw std::invalid_argument("Delta is the Garside element of B4");
      return BraidWord(4, {1, 2, 3, 1, 2, 1});
    case NamedTag::Sigma0of4:
      if (n != 4) throw std::invalid_argument("sigma_0 is defined in B4");
      return BraidWord::generator(4, 3).conjugated_by(alpha1(4));
  }
  throw std::invalid_argument("unknown tag");
}

enum class Subgroup { Even, Pure, Derived };

inline bool membership(const BraidWord& w, Subgroup which) {
  switch (which) {
    case Subgroup::Even: return exponent_sum(w) % 2 == 0;
    case Subgroup::Derived: return exponent_sum(w) == 0;
    case Subgroup::Pure: return permutation_of(w).is_identity();
  }
  return false;
}

/// sigma_i sigma_1^-1 for 2 <= i <= n-1; these generate the commutator subgroup.
inline std::vector<BraidWord> gorin_lin_generators(int n) {
  if (n < 3) throw std::invalid_argument("Gorin-Lin generators need n >= 3");
  std::vector<BraidWord> out;
  for (int i = 2; i <= n - 1; ++i) out.emplace_back(n, std::vector<int>{i, -1});
  return out;
}

}  // namespace braidhom
