#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidhom/braid_word.hpp"
#include "braidhom/curves.hpp"
#include "braidhom/lamination.hpp"

namespace braidhom {

/// Malformed text input.
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view t) {
  Int v{};
  const char* first = t.data();
  if (!t.empty() && t.front() == '+') ++first;
  auto [p, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size() || first == t.data() + t.size())
    throw parse_error("not an integer: '" + std::string(t) + "'");
  return v;
}

// "Xn:" -> n, for header letter X.
inline std::optional<int> header(std::string_view t, char letter) {
  if (t.size() < 3 || t.front() != letter || t.back() != ':') return std::nullopt;
  return parse_int<int>(t.substr(1, t.size() - 2));
}

inline BraidWord word_from(int n, std::span<const std::string_view> toks) {
  std::vector<int> ls;
  for (auto t : toks) {
    const int l = parse_int<int>(t);
    if (l == 0 || std::abs(l) >= n)
      throw parse_error("letter " + std::to_string(l) + " out of range for B" + std::to_string(n));
    ls.push_back(l);
  }
  if (n < 1) throw parse_error("strand count must be positive");
  return BraidWord(n, std::move(ls));
}

}  // namespace detail

/// "Bn: 1 2 -3", or bare letters when `strands` is given.
inline BraidWord parse_braid_word(std::string_view text, std::optional<int> strands = std::nullopt) {
  auto toks = detail::tokens(text);
  std::span<const std::string_view> rest(toks);
  std::optional<int> n;
  if (!toks.empty()) n = detail::header(toks.front(), 'B');
  if (n) {
    rest = rest.subspan(1);
    if (strands && *strands != *n) throw parse_error("header strand count disagrees");
  } else {
    n = strands;
  }
  if (!n) throw parse_error("braid word needs a 'Bn:' header");
  return detail::word_from(*n, rest);
}

inline std::string letters_to_string(const BraidWord& w) {
  std::string s;
  for (int l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l);
  }
  return s;
}

inline std::string to_string(const BraidWord& w) {
  std::string s = "B" + std::to_string(w.strands()) + ":";
  if (!w.empty()) s += " " + letters_to_string(w);
  return s;
}

/// "Ln: a1 .. a_{n-2} | b1 .. b_{n-2}"
inline LaminationCoords parse_lamination(std::string_view text) {
  auto toks = detail::tokens(text);
  if (toks.empty()) throw parse_error("empty lamination");
  auto n = detail::header(toks.front(), 'L');
  if (!n) throw parse_error("lamination needs an 'Ln:' header");
  std::vector<BigInt> a, b;
  bool after_bar = false;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    if (toks[i] == "|") {
      if (after_bar) throw parse_error("more than one '|'");
      after_bar = true;
      continue;
    }
    BigInt v;
    try {
      std::string t(toks[i]);
      if (!t.empty() && t.front() == '+') t.erase(0, 1);
      if (t.empty() || t.find_first_not_of("-0123456789") != std::string::npos || t.find('-', 1) != std::string::npos)
        throw parse_error("");
      v = BigInt(t);
    } catch (...) {
      throw parse_error("not an integer: '" + std::string(toks[i]) + "'");
    }
    (after_bar ? b : a).push_back(v);
  }
  if (!after_bar) throw parse_error("lamination needs a '|' between a and b");
  try {
    return LaminationCoords(*n, std::move(a), std::move(b));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

/// "Cn: i | <letters>"
inline CurveSpec parse_curve(std::string_view text) {
  auto toks = detail::tokens(text);
  if (toks.size() < 3) throw parse_error("curve needs 'Cn: i |'");
  auto n = detail::header(toks[0], 'C');
  if (!n) throw parse_error("curve needs a 'Cn:' header");
  const int base = detail::parse_int<int>(toks[1]);
  if (toks[2] != "|") throw parse_error("curve needs '|' after the base index");
  if (*n < 2 || base < 1 || base > *n - 1) throw parse_error("curve base index out of range");
  return CurveSpec(*n, base, detail::word_from(*n, std::span<const std::string_view>(toks).subspan(3)));
}

inline std::string to_string(const CurveSpec& c) {
  std::string s = "C" + std::to_string(c.strands) + ": " + std::to_string(c.base) + " |";
  if (!c.conjugator.empty()) s += " " + letters_to_string(c.conjugator);
  return s;
}

}  // namespace braidhom
