#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lwbp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses `a`, `-a`, `a/b` or a finite decimal such as `1.25`. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Formats as `a` when integral, `a/b` otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt factorial(unsigned n);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Nonzero exact weight. The sign carries the vertex color.
class Weight {
 public:
  explicit Weight(Rational value);

  const Rational& value() const noexcept { return value_; }
  Rational magnitude() const { return abs(value_); }
  bool is_black() const noexcept { return value_ > 0; }
  bool is_white() const noexcept { return value_ < 0; }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  Rational value_;
};

}  // namespace lwbp
