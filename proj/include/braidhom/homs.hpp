#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "braidhom/braid_word.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/lamination.hpp"
#include "braidhom/word_problem.hpp"

namespace braidhom {

/// A map B_n -> B_m given by the images of sigma_1 .. sigma_{n-1}.
class Homomorphism {
 public:
  Homomorphism(int source, int target, std::vector<BraidWord> images)
      : source_(source), target_(target), images_(std::move(images)) {
    if (source < 2) throw std::invalid_argument("source needs at least 2 strands");
    if (target < 1) throw std::invalid_argument("target needs at least 1 strand");
    if (images_.size() != static_cast<std::size_t>(source - 1))
      throw std::invalid_argument("expected " + std::to_string(source - 1) + " generator images");
    for (const auto& w : images_)
      if (w.strands() != target) throw std::invalid_argument("image on the wrong number of strands");
  }

  int source_strands() const noexcept { return source_; }
  int target_strands() const noexcept { return target_; }
  const std::vector<BraidWord>& images() const noexcept { return images_; }
  /// Image of sigma_i, one-based.
  const BraidWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  /// Set by verify_hom once every defining relation has been checked.
  bool verified() const noexcept { return verified_; }

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  friend bool verify_hom(Homomorphism&, Fuel);
  friend Homomorphism transvect(const Homomorphism&, const BraidWord&, Fuel);
  friend Homomorphism compose_hom(const Homomorphism&, const Homomorphism&);

  int source_;
  int target_;
  std::vector<BraidWord> images_;
  bool verified_ = false;
};

/// Letter-by-letter substitution.
inline BraidWord apply_hom(const Homomorphism& h, const BraidWord& w) {
  if (w.strands() != h.source_strands()) throw std::invalid_argument("word is not in the source group");
  BraidWord out(h.target_strands());
  for (int l : w.letters()) out *= l > 0 ? h.image(l) : h.image(-l).inverse();
  return out;
}

struct RelationFailure {
  int i = 0;
  int j = 0;
  bool braid = false;  ///< braid relation (|i-j| = 1) or far commutation
  std::string describe() const {
    return (braid ? "braid relation " : "far commutation ") + std::string("(") + std::to_string(i) + "," +
           std::to_string(j) + ")";
  }
};

/// The first defining relation of B_n whose image fails, if any. Fuel
/// exhaustion is rethrown with the relation named.
inline std::optional<RelationFailure> failing_relation(const Homomorphism& h, Fuel fuel = {}) {
  const int n = h.source_strands();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RelationFailure rel{i, j, j == i + 1};
      const auto& a = h.image(i);
      const auto& b = h.image(j);
      try {
        const bool ok = rel.braid ? words_equal(a * b * a, b * a * b, fuel) : commutes(a, b, fuel);
        if (!ok) return rel;
      } catch (const undecided_error& e) {
        throw undecided_error(rel.describe() + ": " + e.what());
      }
    }
  return std::nullopt;
}

/// True iff all braid relations hold for the images; marks h verified.
inline bool verify_hom(Homomorphism& h, Fuel fuel = {}) {
  h.verified_ = !failing_relation(h, fuel);
  return h.verified_;
}

/// rho^t(sigma_i) = rho(sigma_i) t. Each generator image is first checked to
/// commute with t; the first one that does not is reported.
inline Homomorphism transvect(const Homomorphism& h, const BraidWord& t, Fuel fuel = {}) {
  if (t.strands() != h.target_strands()) throw std::invalid_argument("transvecting element is not in the target");
  for (int i = 1; i < h.source_strands(); ++i)
    if (!commutes(t, h.image(i), fuel))
      throw centralizer_error("transvecting element does not commute with the image of generator " +
                                  std::to_string(i),
                              i);
  std::vector<BraidWord> images;
  for (const auto& w : h.images()) images.push_back(w * t);
  Homomorphism out(h.source_strands(), h.target_strands(), std::move(images));
  out.verified_ = h.verified_;
  return out;
}

/// outer after inner.
inline Homomorphism compose_hom(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target_strands() != outer.source_strands())
    throw std::invalid_argument("cannot compose: inner target differs from outer source");
  std::vector<BraidWord> images;
  for (const auto& w : inner.images()) images.push_back(apply_hom(outer, w));
  Homomorphism out(inner.source_strands(), outer.target_strands(), std::move(images));
  out.verified_ = outer.verified_ && inner.verified_;
  return out;
}

// ---------------------------------------------------------------------------
// Standard maps

struct StandardKind {
  enum Tag { Trivial, Inclusion, Diagonal, FlipDiagonal, KTwistCabling, ExceptionalB4B3, Inversion, Inner };
  Tag tag = Trivial;
  int k = 0;                            ///< KTwistCabling only
  std::optional<BraidWord> conjugator;  ///< Inner only

  StandardKind(Tag t = Trivial, int k_ = 0, std::optional<BraidWord> w = std::nullopt)
      : tag(t), k(k_), conjugator(std::move(w)) {}
  static StandardKind cabling(int k) { return {KTwistCabling, k}; }
  static StandardKind inner(BraidWord w) { return {Inner, 0, std::move(w)}; }
};

inline std::string to_string(const StandardKind& kind) {
  switch (kind.tag) {
    case StandardKind::Trivial: return "trivial";
    case StandardKind::Inclusion: return "inclusion";
    case StandardKind::Diagonal: return "diagonal";
    case StandardKind::FlipDiagonal: return "flip-diagonal";
    case StandardKind::KTwistCabling: return "cabling(k=" + std::to_string(kind.k) + ")";
    case StandardKind::ExceptionalB4B3: return "exceptional";
    case StandardKind::Inversion: return "inversion";
    case StandardKind::Inner: return "inner";
  }
  return "?";
}

inline Homomorphism trivial_hom(int n, int m) {
  return Homomorphism(n, m, std::vector<BraidWord>(static_cast<std::size_t>(n - 1), BraidWord(m)));
}

/// sigma_i -> sigma_i, B_n -> B_m with m >= n.
inline Homomorphism inclusion_hom(int n, int m) {
  if (m < n) throw std::invalid_argument("inclusion needs m >= n");
  std::vector<BraidWord> images;
  for (int i = 1; i < n; ++i) images.push_back(BraidWord::generator(m, i));
  return Homomorphism(n, m, std::move(images));
}

/// sigma_{2i-1}^k sigma_{2i} sigma_{2i+1} sigma_{2i-1} sigma_{2i}
inline BraidWord cabling_image(int n, int k, int i) {
  const int m = 2 * n;
  return BraidWord::generator(m, 2 * i - 1, k) * BraidWord(m, {2 * i, 2 * i + 1, 2 * i - 1, 2 * i});
}

inline Homomorphism standard_hom(const StandardKind& kind, int n) {
  if (n < 2) throw std::invalid_argument("source needs at least 2 strands");
  std::vector<BraidWord> images;
  switch (kind.tag) {
    case StandardKind::Trivial:
      return trivial_hom(n, 2 * n);
    case StandardKind::Inclusion:
      return inclusion_hom(n, 2 * n);
    case StandardKind::Diagonal:
    case StandardKind::FlipDiagonal: {
      const int e = kind.tag == StandardKind::Diagonal ? 1 : -1;
      for (int i = 1; i < n; ++i) images.push_back(BraidWord(2 * n, {i, e * (n + i)}));
      return Homomorphism(n, 2 * n, std::move(images));
    }
    case StandardKind::KTwistCabling:
      for (int i = 1; i < n; ++i) images.push_back(cabling_image(n, kind.k, i));
      return Homomorphism(n, 2 * n, std::move(images));
    case StandardKind::ExceptionalB4B3:
      if (n != 4) throw std::invalid_argument("the exceptional map has source B4");
      return Homomorphism(4, 3, {BraidWord(3, {1}), BraidWord(3, {2}), BraidWord(3, {1})});
    case StandardKind::Inversion:
      for (int i = 1; i < n; ++i) images.push_back(BraidWord::generator(n, i, -1));
      return Homomorphism(n, n, std::move(images));
    case StandardKind::Inner: {
      if (!kind.conjugator || kind.conjugator->strands() != n)
        throw std::invalid_argument("inner automorphism needs a conjugator on n strands");
      for (int i = 1; i < n; ++i) images.push_back(BraidWord::generator(n, i).conjugated_by(*kind.conjugator));
      return Homomorphism(n, n, std::move(images));
    }
  }
  throw std::invalid_argument("unknown standard kind");
}

/// The block of p strands starting after position `offset` crossing the
/// adjacent block of q strands to its right, all p strands passing in front.
inline BraidWord cable_crossing(int p, int q, int offset, int strands) {
  std::vector<int> ls;
  for (int r = 1; r <= p; ++r)
    for (int s = 1; s <= q; ++s) ls.push_back(offset + p - r + s);
  return BraidWord(strands, std::move(ls));
}

/// Full twist of the strands offset+1 .. offset+len.
inline BraidWord block_twist(int len, int offset, int strands) {
  if (len < 2) return BraidWord(strands);
  return center_z(len).shifted(offset, strands);
}

/// Generators of the centralizer of the image of the standard map B_n -> B_2n.
inline std::vector<BraidWord> centralizer_generators(const StandardKind& kind, int n) {
  const int m = 2 * n;
  std::vector<BraidWord> out;
  switch (kind.tag) {
    case StandardKind::Trivial:
      for (int i = 1; i < m; ++i) out.push_back(BraidWord::generator(m, i));
      return out;
    case StandardKind::Inclusion: {
      for (int i = n + 1; i < m; ++i) out.push_back(BraidWord::generator(m, i));
      // strand n+1 going once around the block 1..n
      std::vector<int> loop;
      for (int i = n; i >= 1; --i) loop.push_back(i);
      for (int i = 1; i <= n; ++i) loop.push_back(i);
      out.emplace_back(m, std::move(loop));
      out.push_back(block_twist(n, 0, m));
      return out;
    }
    case StandardKind::Diagonal:
      out.push_back(block_twist(n, 0, m));
      out.push_back(block_twist(n, n, m));
      out.push_back(cable_crossing(n, n, 0, m));
      return out;
    case StandardKind::FlipDiagonal:
      out.push_back(block_twist(n, 0, m));
      out.push_back(block_twist(n, n, m));
      out.push_back(center_z(m));
      return out;
    case StandardKind::KTwistCabling: {
      out.push_back(center_z(m));
      std::vector<int> odd;
      for (int i = 1; i < m; i += 2) odd.push_back(i);
      out.emplace_back(m, std::move(odd));
      return out;
    }
    default:
      throw std::invalid_argument("no centralizer catalog for " + to_string(kind));
  }
}

// ---------------------------------------------------------------------------
// Fingerprints

/// Fixed witness words, all with exponent sum 0 (so transvections do not
/// change their images). Words using letters beyond sigma_{n-1} are skipped.
inline std::vector<std::pair<std::string, BraidWord>> witnesses(int n) {
  const std::vector<std::pair<std::string, std::vector<int>>> fixed{
      {"s1 s2^-1", {1, -2}},
      {"s1 s3^-1", {1, -3}},
      {"(s1 s3^-1)^2", {1, -3, 1, -3}},
      {"(s2 s4^-1)^2", {2, -4, 2, -4}},
  };
  std::vector<std::pair<std::string, BraidWord>> out;
  for (const auto& [name, letters] : fixed)
    if (std::all_of(letters.begin(), letters.end(), [&](int l) { return std::abs(l) < n; }))
      out.emplace_back(name, BraidWord(n, letters));
  if (n >= 3) out.emplace_back("a1 s1 a1^-1 s2^-1", BraidWord(n, {1}).conjugated_by(alpha1(n)) * BraidWord(n, {-2}));
  return out;
}

struct WitnessData {
  std::string witness;
  bool identity_image = false;
  std::vector<int> cycle_type;
  long pure_power = 1;        ///< order of the image permutation
  std::vector<long> linking;  ///< sorted nonzero pairwise linking numbers of image^pure_power
  friend auto operator<=>(const WitnessData&, const WitnessData&) = default;
};

struct Fingerprint {
  bool cyclic_image = false;
  std::vector<WitnessData> witnesses;
  /// For each target strand, its sorted (witness index, linking number)
  /// incidences; the outer list is sorted, so strand labels are forgotten.
  std::vector<std::vector<std::pair<std::size_t, long>>> strand_profiles;
  bool sign_bipartition = false;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

namespace detail {

using Profile = std::vector<std::pair<std::size_t, long>>;

inline Profile mirrored(Profile p) {
  for (auto& e : p) e.second = -e.second;
  std::sort(p.begin(), p.end());
  return p;
}

inline std::vector<Profile> mirrored(std::vector<Profile> ps) {
  for (auto& p : ps) p = mirrored(std::move(p));
  std::sort(ps.begin(), ps.end());
  return ps;
}

// Strands joined by a witness image (same permutation cycle or nonzero
// linking) form blocks. True when there are exactly two blocks, the profiles
// of one are the mirror image of the other's, and neither is its own mirror.
inline bool mirror_blocks(const std::vector<std::pair<std::size_t, std::size_t>>& joins,
                          const std::vector<Profile>& profiles) {
  std::vector<std::size_t> parent(profiles.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [s, t] : joins) parent[find(s)] = find(t);
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t s = 0; s < profiles.size(); ++s) blocks[find(s)].push_back(s);
  std::vector<std::vector<Profile>> big;
  for (const auto& [root, members] : blocks) {
    if (members.size() < 2) continue;
    std::vector<Profile> ps;
    for (auto s : members) ps.push_back(profiles[s]);
    std::sort(ps.begin(), ps.end());
    big.push_back(std::move(ps));
  }
  return big.size() == 2 && big[1] == mirrored(big[0]) && big[0] != big[1];
}

}  // namespace detail

/// Every linking number negated; what post-composition with inversion does.
inline Fingerprint mirrored(Fingerprint f) {
  for (auto& w : f.witnesses) {
    for (auto& x : w.linking) x = -x;
    std::sort(w.linking.begin(), w.linking.end());
  }
  f.strand_profiles = detail::mirrored(std::move(f.strand_profiles));
  return f;
}

/// Equal up to a global sign flip.
inline bool fingerprints_match(const Fingerprint& a, const Fingerprint& b) { return a == b || a == mirrored(b); }

inline Fingerprint fingerprint(const Homomorphism& h, Fuel fuel = {}) {
  if (!h.verified()) throw precondition_error("fingerprint needs a verified homomorphism");
  Fingerprint f;
  const int n = h.source_strands();
  const auto m = static_cast<std::size_t>(h.target_strands());

  f.cyclic_image = true;
  for (int i = 2; i < n && f.cyclic_image; ++i) f.cyclic_image = words_equal_screened(h.image(1), h.image(i), fuel);

  std::vector<std::pair<std::size_t, std::size_t>> joins;
  std::vector<detail::Profile> profiles(m);
  const auto ws = witnesses(n);
  for (std::size_t wi = 0; wi < ws.size(); ++wi) {
    WitnessData d;
    d.witness = ws[wi].first;
    if (is_trivial_screened(ws[wi].second, fuel)) {
      d.identity_image = true;
      d.cycle_type = Permutation(static_cast<int>(m)).cycle_type();
      d.pure_power = 1;
      f.witnesses.push_back(std::move(d));
      continue;
    }
    const BraidWord img = apply_hom(h, ws[wi].second);
    d.identity_image = is_trivial_screened(img, fuel);
    const auto perm = permutation_of(img);
    d.cycle_type = perm.cycle_type();
    d.pure_power = perm.order();
    for (std::size_t s = 0; s < m; ++s) joins.emplace_back(s, static_cast<std::size_t>(perm(static_cast<int>(s) + 1) - 1));
    const auto cm = crossing_matrix(img.pow(static_cast<int>(d.pure_power)));
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = s + 1; t < m; ++t) {
        if (cm[s][t] == 0) continue;
        const long lk = cm[s][t] / 2;
        d.linking.push_back(lk);
        joins.emplace_back(s, t);
        profiles[s].emplace_back(wi, lk);
        profiles[t].emplace_back(wi, lk);
      }
    std::sort(d.linking.begin(), d.linking.end());
    f.witnesses.push_back(std::move(d));
  }
  for (auto& p : profiles) std::sort(p.begin(), p.end());
  f.sign_bipartition = detail::mirror_blocks(joins, profiles);
  std::sort(profiles.begin(), profiles.end());
  f.strand_profiles = std::move(profiles);
  return f;
}

/// Names of the standard maps B_n -> B_2n (cabling with |k| <= k_max) whose
/// fingerprint matches h's. Empty means "no match", not "inequivalent".
inline std::vector<std::string> match_standard(const Homomorphism& h, int k_max = 3, Fuel fuel = {}) {
  std::vector<std::string> out;
  const int n = h.source_strands();
  if (h.target_strands() != 2 * n) return out;
  const auto fh = fingerprint(h, fuel);
  std::vector<StandardKind> kinds{{StandardKind::Trivial}, {StandardKind::Inclusion}, {StandardKind::Diagonal},
                                  {StandardKind::FlipDiagonal}};
  for (int k = -k_max; k <= k_max; ++k) kinds.push_back(StandardKind::cabling(k));
  for (const auto& kind : kinds) {
    auto s = standard_hom(kind, n);
    verify_hom(s, fuel);
    if (fingerprints_match(fh, fingerprint(s, fuel))) out.push_back(to_string(kind));
  }
  return out;
}

}  // namespace braidhom
