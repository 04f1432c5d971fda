#pragma once

#include "braidhom/braid_word.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/handle_reduction.hpp"

namespace braidhom {

/// True iff w is the identity of B_n. Decided by handle reduction; throws
/// undecided_error when the fuel runs out.
inline bool is_trivial(const BraidWord& w, Fuel fuel = {}) {
  if (w.empty()) return true;
  if (w.strands() <= 2) return exponent_sum(w) == 0;
  return HandleReducer(fuel).reduce(w).empty();
}

inline bool words_equal(const BraidWord& u, const BraidWord& v, Fuel fuel = {}) {
  return is_trivial(u * v.inverse(), fuel);
}

inline bool commutes(const BraidWord& u, const BraidWord& v, Fuel fuel = {}) {
  return is_trivial(u * v * u.inverse() * v.inverse(), fuel);
}

}  // namespace braidhom
