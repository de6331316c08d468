#include "metricext/rational.hpp"

#include <cctype>
#include <cstdio>

#include "metricext/errors.hpp"

namespace metricext {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int pow10(std::size_t k) {
  cpp_int p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(Errc::parse_error, "empty number: '" + std::string(text) + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(Errc::parse_error, "malformed rational: '" + std::string(text) + "'");
    }
    cpp_int p{std::string(num)};
    cpp_int q{std::string(den)};
    if (q == 0) throw Error(Errc::parse_error, "zero denominator: '" + std::string(text) + "'");
    value = Rational(p, q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw Error(Errc::parse_error, "malformed decimal: '" + std::string(text) + "'");
    }
    cpp_int p = whole.empty() ? cpp_int(0) : cpp_int{std::string(whole)};
    cpp_int q = pow10(frac.size());
    p *= q;
    if (!frac.empty()) p += cpp_int{std::string(frac)};
    value = Rational(p, q);
  } else {
    if (!all_digits(s)) {
      throw Error(Errc::parse_error, "malformed number: '" + std::string(text) + "'");
    }
    value = Rational(cpp_int{std::string(s)});
  }
  return negative ? -value : value;
}

Rational parse_weight(std::string_view text) {
  Rational r = parse_rational(text);
  if (r < 0) {
    throw Error(Errc::negative_weight, "weight must be nonnegative: '" + std::string(text) + "'");
  }
  return r;
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

std::string format_approx(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", r.convert_to<double>());
  return buf;
}

}  // namespace metricext
