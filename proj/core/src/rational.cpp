#include "hypersim/rational.hpp"

#include <cmath>

#include "hypersim/error.hpp"

namespace hypersim {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Boost reads a leading 0 as an octal prefix, so strip it first.
BigInt from_decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = from_decimal_digits(text);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw DomainError("malformed rational '" + std::string(whole) + "'");
    }
    BigInt den = from_decimal_digits(den_text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw DomainError("malformed rational '" + std::string(whole) + "'");
    }
    BigInt digits = from_decimal_digits(std::string(int_part) + std::string(frac_part));
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    Rational value(digits, scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(parse_integer(text, whole));
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53-bit integer mantissa, exact.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{BigInt(scaled)};
  if (exponent > 0) {
    result *= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(exponent)));
  } else if (exponent < 0) {
    result /= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(-exponent)));
  }
  return result;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_string(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_natural(std::string_view text) {
  if (!all_digits(text)) throw DomainError("malformed natural number '" + std::string(text) + "'");
  return from_decimal_digits(text);
}

}  // namespace hypersim
