#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever once C++20
// adds reversed candidates. Exact non-template overloads win overload resolution.
namespace boost {
inline constexpr bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline constexpr bool operator==(const rational<std::int64_t>& a, long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline constexpr bool operator==(const rational<std::int64_t>& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace bruhatkit {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

int sign(const Rational& q);

}  // namespace bruhatkit
