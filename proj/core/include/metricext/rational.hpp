// rational.hpp - exact rational weights and their text representations.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace metricext {

using Rational = boost::multiprecision::cpp_rational;

// Parses "5", "-5", "1.25" or "p/q" exactly. Throws Error{parse_error}
// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Parses like parse_rational but rejects negative values
// (Error{negative_weight}).
Rational parse_weight(std::string_view text);

// Canonical "p" / "p/q" form (reduced, q > 1 only when needed).
std::string format_rational(const Rational& r);

// Display-only decimal approximation, 6 significant digits.
std::string format_approx(const Rational& r);

}  // namespace metricext
