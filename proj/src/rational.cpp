#include "lwbp/rational.hpp"

#include <cctype>

#include "lwbp/errors.hpp"

namespace lwbp {

const char* to_string(ValidationKind kind) noexcept {
  switch (kind) {
    case ValidationKind::weight_sum: return "weight_sum";
    case ValidationKind::zero_weight: return "zero_weight";
    case ValidationKind::duplicate_label: return "duplicate_label";
    case ValidationKind::single_color: return "single_color";
    case ValidationKind::not_full: return "not_full";
    case ValidationKind::unknown_label: return "unknown_label";
    case ValidationKind::not_a_permutation: return "not_a_permutation";
    case ValidationKind::mismatched_passport: return "mismatched_passport";
    case ValidationKind::bad_vertex: return "bad_vertex";
    case ValidationKind::nonpositive_edge_weight: return "nonpositive_edge_weight";
    case ValidationKind::parallel_edge: return "parallel_edge";
    case ValidationKind::odd_cycle: return "odd_cycle";
    case ValidationKind::monochromatic_edge: return "monochromatic_edge";
    case ValidationKind::cycle: return "cycle";
    case ValidationKind::rotation_mismatch: return "rotation_mismatch";
    case ValidationKind::weight_mismatch: return "weight_mismatch";
    case ValidationKind::disconnected: return "disconnected";
    case ValidationKind::bad_marks: return "bad_marks";
    case ValidationKind::not_a_tree_permutation: return "not_a_tree_permutation";
    case ValidationKind::too_large: return "too_large";
    case ValidationKind::schema: return "schema";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  BigInt out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt d = parse_digits(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : parse_digits(whole);
    value = Rational(w * scale + parse_digits(frac), scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    value = Rational(parse_digits(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / boost::multiprecision::gcd(a, b) * b);
}

Weight::Weight(Rational value) : value_(std::move(value)) {
  if (value_ == 0) throw ValidationError(ValidationKind::zero_weight, "weight must be nonzero");
}

}  // namespace lwbp
