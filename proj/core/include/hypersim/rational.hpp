#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypersim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p", or a plain decimal such as "-0.125" into an exact
/// rational. Throws DomainError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double (every finite double is dyadic).
Rational rational_from_double(double value);

double to_double(const Rational& value);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

BigInt parse_natural(std::string_view text);

}  // namespace hypersim
