#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "braidhom/braid_word.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/parallel.hpp"

namespace braidhom {

/// n(n-1) divides m(m-1).
inline bool special_constraint(long n, long m) {
  if (n < 1 || m < 1) throw std::invalid_argument("strand counts must be positive");
  const long d = n * (n - 1);
  const long v = m * (m - 1);
  if (d == 0) return v == 0;
  return v % d == 0;
}

/// For n >= 5 and 2 <= m <= 2n with m != n, true iff n(n-1) fails to divide
/// m(m-1). Outside that range the statement is vacuous and the answer is true
/// (for m = 1 the target group is trivial).
inline bool corollary_range_check(long n, long m) {
  if (n < 5 || m < 2 || m > 2 * n || m == n) return true;
  return !special_constraint(n, m);
}

struct SymEnumerationReport {
  int n = 0;
  int k = 0;
  std::uint64_t solutions = 0;
  std::uint64_t cyclic_solutions = 0;
  std::optional<std::vector<Permutation>> non_cyclic_example;  ///< first in enumeration order
  bool all_cyclic() const { return solutions == cyclic_solutions; }
};

namespace detail {

inline std::vector<Permutation> all_permutations(int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Key for set membership: the one-based images.
inline std::vector<int> key(const Permutation& p) {
  std::vector<int> v;
  for (int i = 1; i <= p.size(); ++i) v.push_back(p(i));
  return v;
}

// The subgroup generated by gens is cyclic iff some element has order equal
// to the subgroup's size.
inline bool generates_cyclic(const std::vector<Permutation>& gens, int k) {
  std::set<std::vector<int>> seen{key(Permutation(k))};
  std::vector<Permutation> elems{Permutation(k)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto p = elems[i].then(g);
      if (seen.insert(key(p)).second) elems.push_back(p);
    }
  const auto size = static_cast<long>(elems.size());
  return std::any_of(elems.begin(), elems.end(), [&](const Permutation& p) { return p.order() == size; });
}

}  // namespace detail

/// Every tuple (x_1..x_{n-1}) in S_k^{n-1} satisfying the braid relations,
/// found by depth-first search with relation pruning. The search is split
/// over the choices of x_1.
inline SymEnumerationReport sym_hom_enumerate(int n, int k, std::uint64_t max_tuples = 1'000'000'000'000ull,
                                              unsigned threads = default_threads()) {
  if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
  const auto perms = detail::all_permutations(k);
  double space = 1;
  for (int i = 1; i < n; ++i) space *= static_cast<double>(perms.size());
  if (space > static_cast<double>(max_tuples)) throw precondition_error("tuple space exceeds the size guard");

  struct Partial {
    std::uint64_t solutions = 0, cyclic = 0;
    std::optional<std::vector<Permutation>> example;
  };
  auto search_from = [&](const Permutation& first) {
    Partial out;
    std::vector<Permutation> tuple{first};
    auto rec = [&](auto& self) -> void {
      if (static_cast<int>(tuple.size()) == n - 1) {
        ++out.solutions;
        if (detail::generates_cyclic(tuple, k))
          ++out.cyclic;
        else if (!out.example)
          out.example = tuple;
        return;
      }
      for (const auto& x : perms) {
        const auto& prev = tuple.back();
        if (!(prev.then(x).then(prev) == x.then(prev).then(x))) continue;
        bool ok = true;
        for (std::size_t j = 0; j + 1 < tuple.size() && ok; ++j) ok = tuple[j].then(x) == x.then(tuple[j]);
        if (!ok) continue;
        tuple.push_back(x);
        self(self);
        tuple.pop_back();
      }
    };
    rec(rec);
    return out;
  };

  const auto parts = parallel_map(std::span<const Permutation>(perms), search_from, threads);
  SymEnumerationReport rep;
  rep.n = n;
  rep.k = k;
  for (const auto& p : parts) {
    rep.solutions += p.solutions;
    rep.cyclic_solutions += p.cyclic;
    if (!rep.non_cyclic_example && p.example) rep.non_cyclic_example = p.example;
  }
  return rep;
}

}  // namespace braidhom
