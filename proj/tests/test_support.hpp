#pragma once

#include <random>
#include <vector>

#include "braidhom/braid_word.hpp"

namespace braidhom::testing {

/// Uniform random letters in {+-1, .., +-(n-1)}; length uniform in [0, max_len].
inline BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
  if (n < 2) return BraidWord(n);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> ls;
  const int len = len_dist(rng);
  for (int r = 0; r < len; ++r) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, std::move(ls));
}

inline BraidWord random_word_exact(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> ls;
  for (int r = 0; r < len; ++r) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, std::move(ls));
}

}  // namespace braidhom::testing
