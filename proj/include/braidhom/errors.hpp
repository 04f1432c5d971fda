#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidhom {

/// Handle reduction ran out of fuel before reaching a handle-free word.
/// Never converted into a boolean verdict.
class undecided_error : public std::runtime_error {
 public:
  explicit undecided_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input that is well-typed but violates an operation's precondition
/// (not in cabling position, centralizer precheck failed, ...).
class precondition_error : public std::domain_error {
 public:
  explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

/// A proposed transvecting element fails to commute with a generator image.
class centralizer_error : public precondition_error {
 public:
  centralizer_error(const std::string& what, int generator)
      : precondition_error(what), generator_(generator) {}
  int generator() const noexcept { return generator_; }

 private:
  int generator_;
};

/// Elementary-step budget for handle reduction.
struct Fuel {
  std::size_t steps = 1'000'000;
};

}  // namespace braidhom
