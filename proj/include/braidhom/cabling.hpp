#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidhom/braid_word.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/homs.hpp"
#include "braidhom/word_problem.hpp"

namespace braidhom {

/// Cable sizes p_1..p_k; cable j occupies the consecutive strands
/// offset(j)+1 .. offset(j)+p_j.
class CableStructure {
 public:
  explicit CableStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("cable structure needs at least one cable");
    for (int p : sizes_)
      if (p < 1) throw std::invalid_argument("cable sizes must be positive");
  }
  /// n cables of size 2.
  static CableStructure pairs(int n) { return CableStructure(std::vector<int>(static_cast<std::size_t>(n), 2)); }

  int cables() const noexcept { return static_cast<int>(sizes_.size()); }
  int strands() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  /// One-based cable index.
  int size(int j) const { return sizes_.at(static_cast<std::size_t>(j - 1)); }
  int offset(int j) const {
    check_cable(j);
    return std::accumulate(sizes_.begin(), sizes_.begin() + (j - 1), 0);
  }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  /// Cable containing the one-based strand s.
  int cable_of(int s) const {
    for (int j = 1, end = 0; j <= cables(); ++j)
      if (s <= (end += size(j))) return j;
    throw std::invalid_argument("strand out of range");
  }
  void check_cable(int j) const {
    if (j < 1 || j > cables()) throw std::invalid_argument("cable index out of range");
  }

  friend bool operator==(const CableStructure&, const CableStructure&) = default;

 private:
  std::vector<int> sizes_;
};

inline std::string to_string(const CableStructure& cs) {
  std::string s = "P:";
  for (int p : cs.sizes()) s += " " + std::to_string(p);
  return s;
}

inline CableStructure parse_cable_structure(std::string_view text) {
  std::vector<int> sizes;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i, 2) != "P:") throw std::invalid_argument("cable structure needs a 'P:' header");
  i += 2;
  while (skip(), i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i || (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))))
      throw std::invalid_argument("cable sizes must be positive integers");
    sizes.push_back(std::stoi(std::string(text.substr(i, j - i))));
    i = j;
  }
  return CableStructure(std::move(sizes));
}

/// f on p_j strands, moved into cable j's block.
inline BraidWord iota(int j, const BraidWord& f, const CableStructure& cs) {
  cs.check_cable(j);
  if (f.strands() != cs.size(j)) throw std::invalid_argument("interior word has the wrong strand count");
  return f.shifted(cs.offset(j), cs.strands());
}

/// Each strand of w blown up into a parallel cable without internal crossings.
/// The net permutation must carry every cable onto one of the same size.
inline BraidWord beta(const BraidWord& w, const CableStructure& cs) {
  if (w.strands() != cs.cables()) throw std::invalid_argument("exterior word must have one strand per cable");
  std::vector<int> sizes = cs.sizes();  // sizes by current position
  BraidWord out(cs.strands());
  for (int l : w.letters()) {
    const auto j = static_cast<std::size_t>(std::abs(l));
    const int offset = std::accumulate(sizes.begin(), sizes.begin() + static_cast<long>(j - 1), 0);
    const int p = sizes[j - 1], q = sizes[j];
    if (l > 0)
      out *= cable_crossing(p, q, offset, cs.strands());
    else
      out *= cable_crossing(q, p, offset, cs.strands()).inverse();
    std::swap(sizes[j - 1], sizes[j]);
  }
  if (sizes != cs.sizes()) throw std::invalid_argument("exterior braid permutes cables of different sizes");
  return out;
}

/// (f_1, .., f_k; f_e) in the stabilizer B_k |x (B_p1 x .. x B_pk).
struct SemidirectElement {
  BraidWord exterior;
  std::vector<BraidWord> interiors;

  void check(const CableStructure& cs) const {
    if (exterior.strands() != cs.cables()) throw std::invalid_argument("exterior has the wrong strand count");
    if (interiors.size() != static_cast<std::size_t>(cs.cables()))
      throw std::invalid_argument("need one interior per cable");
    for (int j = 1; j <= cs.cables(); ++j)
      if (interiors[static_cast<std::size_t>(j - 1)].strands() != cs.size(j))
        throw std::invalid_argument("interior " + std::to_string(j) + " has the wrong strand count");
    const auto perm = permutation_of(exterior);
    for (int j = 1; j <= cs.cables(); ++j)
      if (cs.size(perm(j)) != cs.size(j)) throw std::invalid_argument("exterior permutes cables of different sizes");
  }
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// iota_1(f_1) .. iota_k(f_k) beta(f_e)
inline BraidWord embed_F(const SemidirectElement& e, const CableStructure& cs) {
  e.check(cs);
  BraidWord out(cs.strands());
  for (int j = 1; j <= cs.cables(); ++j) out *= iota(j, e.interiors[static_cast<std::size_t>(j - 1)], cs);
  return out * beta(e.exterior, cs);
}

/// The braid left after forgetting every strand whose start position is not
/// kept (one-based mask).
inline BraidWord forget_strands(const BraidWord& w, const std::vector<bool>& keep) {
  const auto m = static_cast<std::size_t>(w.strands());
  if (keep.size() != m) throw std::invalid_argument("mask size differs from strand count");
  const int kept = static_cast<int>(std::count(keep.begin(), keep.end(), true));
  std::vector<std::size_t> strand_at(m);
  std::iota(strand_at.begin(), strand_at.end(), std::size_t{0});
  std::vector<int> ls;
  for (int l : w.letters()) {
    const auto j = static_cast<std::size_t>(std::abs(l));
    const auto s = strand_at[j - 1], t = strand_at[j];
    if (keep[s] && keep[t]) {
      int index = 0;  // kept strands at positions 1..j
      for (std::size_t p = 0; p < j; ++p) index += keep[strand_at[p]] ? 1 : 0;
      ls.push_back(l > 0 ? index : -index);
    }
    std::swap(strand_at[j - 1], strand_at[j]);
  }
  return BraidWord(std::max(kept, 1), std::move(ls));
}

/// Checks that w maps each cable's strand set onto some cable's strand set
/// and returns the induced cable permutation.
inline Permutation cable_permutation(const BraidWord& w, const CableStructure& cs) {
  if (w.strands() != cs.strands()) throw std::invalid_argument("word and cable structure disagree on strands");
  const auto perm = permutation_of(w);
  std::vector<int> image(static_cast<std::size_t>(cs.cables()));
  for (int j = 1; j <= cs.cables(); ++j) {
    const int target = cs.cable_of(perm(cs.offset(j) + 1));
    if (cs.size(target) != cs.size(j)) throw precondition_error("word does not preserve the cable partition");
    for (int s = cs.offset(j) + 1; s <= cs.offset(j) + cs.size(j); ++s)
      if (cs.cable_of(perm(s)) != target) throw precondition_error("word does not preserve the cable partition");
    image[static_cast<std::size_t>(j - 1)] = target;
  }
  return Permutation::from_images(image);
}

/// The exterior braid: one representative strand (the first) per cable.
inline BraidWord exterior_of(const BraidWord& w, const CableStructure& cs) {
  cable_permutation(w, cs);
  std::vector<bool> keep(static_cast<std::size_t>(cs.strands()), false);
  for (int j = 1; j <= cs.cables(); ++j) keep[static_cast<std::size_t>(cs.offset(j))] = true;
  return forget_strands(w, keep);
}

/// Signed crossings between the two strands that start in cable j.
inline long interior_writhe(const BraidWord& w, int j, const CableStructure& cs) {
  cs.check_cable(j);
  if (cs.size(j) != 2) throw precondition_error("interior writhe needs a cable of size 2");
  cable_permutation(w, cs);
  const auto s = static_cast<std::size_t>(cs.offset(j));
  return crossing_matrix(w)[s][s + 1];
}

/// Inverse of embed_F on size-2 cables: exterior by forgetting strands,
/// interiors sigma_1^writhe.
inline SemidirectElement decompose(const BraidWord& w, const CableStructure& cs) {
  SemidirectElement e{exterior_of(w, cs), {}};
  for (int j = 1; j <= cs.cables(); ++j)
    e.interiors.push_back(BraidWord::generator(2, 1, static_cast<int>(interior_writhe(w, j, cs))));
  return e;
}

/// Product of iota_j(sigma_1^{m_j}) over all size-2 cables.
inline BraidWord interior_twists(const std::vector<long>& m, const CableStructure& cs) {
  if (m.size() != static_cast<std::size_t>(cs.cables())) throw std::invalid_argument("one twist count per cable");
  BraidWord out(cs.strands());
  for (int j = 1; j <= cs.cables(); ++j)
    out *= iota(j, BraidWord::generator(cs.size(j), 1, static_cast<int>(m[static_cast<std::size_t>(j - 1)])), cs);
  return out;
}

/// sigma_1 sigma_3 .. sigma_{2n-1}: one half-twist in every cable.
inline BraidWord cable_half_twists(int n) {
  std::vector<long> ones(static_cast<std::size_t>(n), 1);
  return interior_twists(ones, CableStructure::pairs(n));
}

/// d_h(g) = h(g) beta(g)^-1, read off as one twist count per cable. Requires
/// the defect to fix every cable and to have no crossings between cables.
inline std::vector<long> crossed_vector(const Homomorphism& h, const BraidWord& g) {
  const int n = h.source_strands();
  if (h.target_strands() != 2 * n) throw precondition_error("cabling maps go from B_n to B_2n");
  const auto cs = CableStructure::pairs(n);
  const BraidWord d = apply_hom(h, g) * beta(g, cs).inverse();
  if (!cable_permutation(d, cs).is_identity()) throw precondition_error("defect does not fix every cable");
  const auto cm = crossing_matrix(d);
  std::vector<long> out;
  for (int j = 1; j <= n; ++j) {
    const auto s = static_cast<std::size_t>(2 * j - 2);
    for (std::size_t t = 0; t < cm.size(); ++t)
      if (t != s && t != s + 1 && (cm[s][t] != 0 || cm[s + 1][t] != 0))
        throw precondition_error("defect has crossings between different cables");
    out.push_back(cm[s][s + 1]);
  }
  return out;
}

struct CablingClassification {
  long k_canonical = 0;
  long x = 0;
  long y = 0;
  /// interior_matrix[c][i]: twist of cable c+1 in the defect of sigma_{i+1}
  /// (after removing the central part)
  std::vector<std::vector<long>> interior_matrix;
  std::vector<long> conjugator_exponents;  ///< m_1 = 0
  long transvection_exponent = 0;          ///< power of sigma_1 sigma_3 .. applied
  long center_exponent = 0;                ///< power of z (on 2n strands) applied
  bool certified = false;
};

/// Brings a cabling map B_n -> B_2n in standard cable position to the k-twist
/// cabling it is equivalent to: a transvection by a power of z removes the
/// central part of the exterior, a transvection by a power of
/// sigma_1 sigma_3 .. sigma_{2n-1} makes the off-diagonal twists vanish, and
/// conjugation by interior twists with exponents m solves
/// m_{i+1} - m_i + k_{i+1,i} - x/2 = 0. Certified when the normalized images
/// equal the k-twist cabling images in B_2n.
inline CablingClassification classify_cabling(const Homomorphism& h, Fuel fuel = {}) {
  if (!h.verified()) throw precondition_error("classification needs a verified homomorphism");
  const int n = h.source_strands();
  if (h.target_strands() != 2 * n) throw precondition_error("cabling maps go from B_n to B_2n");
  const auto cs = CableStructure::pairs(n);
  const int m = 2 * n;

  // Exterior of rho(sigma_i) must be sigma_i z^s with s independent of i.
  std::optional<long> s;
  for (int i = 1; i < n; ++i) {
    const auto perm = cable_permutation(h.image(i), cs);
    if (!(perm == Permutation::transposition(n, i, i + 1)))
      throw precondition_error("image of generator " + std::to_string(i) + " does not swap cables " +
                               std::to_string(i) + " and " + std::to_string(i + 1));
    const BraidWord ext = exterior_of(h.image(i), cs);
    const long excess = exponent_sum(ext) - 1;
    const long full = static_cast<long>(n) * (n - 1);
    if (excess % full != 0) throw precondition_error("exterior is not a generator times a central element");
    if (s && *s != excess / full) throw precondition_error("exterior central parts differ between generators");
    s = excess / full;
    if (!words_equal(ext, BraidWord::generator(n, i) * center_z(n).pow(static_cast<int>(*s)), fuel))
      throw precondition_error("exterior of generator " + std::to_string(i) + " is not standard");
  }

  CablingClassification c;
  c.center_exponent = s ? -*s : 0;
  const Homomorphism h0 = c.center_exponent == 0 ? h : transvect(h, center_z(m).pow(static_cast<int>(c.center_exponent)), fuel);

  c.interior_matrix.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n - 1), 0));
  for (int i = 1; i < n; ++i) {
    const auto d = crossed_vector(h0, BraidWord::generator(n, i));
    for (int cab = 1; cab <= n; ++cab)
      c.interior_matrix[static_cast<std::size_t>(cab - 1)][static_cast<std::size_t>(i - 1)] =
          d[static_cast<std::size_t>(cab - 1)];
  }
  auto K = [&](int cab, int i) {
    return c.interior_matrix[static_cast<std::size_t>(cab - 1)][static_cast<std::size_t>(i - 1)];
  };

  // d(sigma_j^2) = (x, .., x, y, y, x, .., x): x = 2 k_{cj} off the swapped pair,
  // y = k_{jj} + k_{j+1,j} on it.
  std::optional<long> x, y;
  for (int j = 1; j < n; ++j) {
    for (int cab = 1; cab <= n; ++cab) {
      if (cab == j || cab == j + 1) continue;
      if (x && *x != 2 * K(cab, j)) throw precondition_error("inconsistent x: not a cabling section");
      x = 2 * K(cab, j);
    }
    const long yj = K(j, j) + K(j + 1, j);
    if (y && *y != yj) throw precondition_error("inconsistent y: not a cabling section");
    y = yj;
  }
  c.x = x.value_or(0);
  c.y = y.value_or(0);
  if (c.x % 2 != 0) throw precondition_error("odd x: not a cabling section");
  c.k_canonical = c.y - c.x;
  c.transvection_exponent = -c.x / 2;

  c.conjugator_exponents.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i)
    c.conjugator_exponents[static_cast<std::size_t>(i)] =
        c.conjugator_exponents[static_cast<std::size_t>(i - 1)] - K(i + 1, i) + c.x / 2;

  const BraidWord tau = cable_half_twists(n).pow(static_cast<int>(c.transvection_exponent));
  const BraidWord a = interior_twists(c.conjugator_exponents, cs);
  c.certified = true;
  for (int i = 1; i < n && c.certified; ++i) {
    const BraidWord normalized = (h0.image(i) * tau).conjugated_by(a);
    c.certified = words_equal(normalized, cabling_image(n, static_cast<int>(c.k_canonical), i), fuel);
  }
  return c;
}

}  // namespace braidhom
