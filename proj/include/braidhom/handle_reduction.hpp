#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "braidhom/braid_word.hpp"
#include "braidhom/errors.hpp"

namespace braidhom {

/// Dehornoy's handle reduction.
///
/// A sigma_i-handle is a factor s_i^e u s_i^-e in which u has no letter of
/// index i or i-1. Reducing it replaces every s_{i+1}^d of u by
/// s_{i+1}^-e s_i^d s_{i+1}^e and drops the two outer letters. We always
/// reduce the handle whose closing letter comes first; such a handle is
/// permitted (it contains no nested s_{i+1}-handle), and the procedure ends on
/// a handle-free word, which is empty iff the input is trivial.
///
/// Every letter visited or emitted costs one unit of fuel.
class HandleReducer {
 public:
  explicit HandleReducer(Fuel fuel = {}) : budget_(fuel.steps) {}

  /// Returns the handle-free word equal to `w`; throws undecided_error on
  /// fuel exhaustion.
  BraidWord reduce(const BraidWord& w) {
    std::vector<int> word(w.letters().begin(), w.letters().end());
    const auto n = static_cast<std::size_t>(w.strands());
    std::vector<long> last(n + 1);
    std::size_t start = 0;
    while (true) {
      // Scan for the first handle, starting at `start`; positions before
      // `start` are known not to close a handle.
      std::fill(last.begin(), last.end(), -1);
      for (std::size_t q = 0; q < start; ++q) last[static_cast<std::size_t>(std::abs(word[q]))] = static_cast<long>(q);
      spend(start);
      bool found = false;
      std::size_t p = 0, q = start;
      for (; q < word.size(); ++q) {
        spend(1);
        const int l = word[q];
        const auto i = static_cast<std::size_t>(std::abs(l));
        const long open = last[i];
        if (open >= 0 && (i == 1 || last[i - 1] < open) && word[static_cast<std::size_t>(open)] == -l) {
          p = static_cast<std::size_t>(open);
          found = true;
          break;
        }
        last[i] = static_cast<long>(q);
      }
      if (!found) break;
      rewrite(word, p, q);
      start = p;
    }
    return BraidWord(w.strands(), std::move(word));
  }

  std::size_t steps_used() const noexcept { return used_; }

 private:
  void rewrite(std::vector<int>& word, std::size_t p, std::size_t q) {
    const int opener = word[p];
    const int i = std::abs(opener);
    const int e = opener > 0 ? 1 : -1;
    std::vector<int> out(word.begin(), word.begin() + static_cast<long>(p));
    auto push = [&](int l) {
      spend(1);
      if (out.size() > p && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    };
    for (std::size_t r = p + 1; r < q; ++r) {
      const int l = word[r];
      if (std::abs(l) == i + 1) {
        const int d = l > 0 ? 1 : -1;
        push(-e * (i + 1));
        push(d * i);
        push(e * (i + 1));
      } else {
        push(l);
      }
    }
    for (std::size_t r = q + 1; r < word.size(); ++r) push(word[r]);
    word = std::move(out);
  }

  void spend(std::size_t k) {
    used_ += k;
    if (used_ > budget_)
      throw undecided_error("handle reduction exhausted its fuel of " + std::to_string(budget_) +
                            " steps");
  }

  std::size_t budget_;
  std::size_t used_ = 0;
};

}  // namespace braidhom
