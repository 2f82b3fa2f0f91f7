#pragma once

// Exact rationals for length data. Inputs are "p/q" or "p"; decimals and
// anything else are rejected so that sign decisions stay exact.

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace z2syz {

using Rational = boost::rational<std::int64_t>;

// Compare only against Rational values: with C++20 rewritten operators, the
// mixed rational == integer overloads of older Boost recurse forever.
inline const Rational kZero{0};

class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t parse_integer(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw RationalParseError("not an exact rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
  const auto num = detail::parse_integer(text.substr(0, slash), text);
  const auto den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw RationalParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline Rational abs(const Rational& q) { return q < Rational(0) ? -q : q; }

}  // namespace z2syz
