#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rig {

// Exact fraction, always normalized: den > 0 and gcd(|num|, den) == 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;

  Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw std::invalid_argument("rational: zero denominator");
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    if (g > 1) {
      numerator /= g;
      denominator /= g;
    }
    num = numerator;
    den = denominator;
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::strong_ordering operator<=>(const Rational& o) const {
    auto lhs = static_cast<__int128>(num) * o.den;
    auto rhs = static_cast<__int128>(o.num) * den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace rig
