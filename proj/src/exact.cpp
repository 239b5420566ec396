#include "tinv/exact.hpp"

#include <limits>

#include "tinv/errors.hpp"

namespace tinv {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Integer floor(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  const Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw InvalidInput("malformed integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

QmodZ::QmodZ(const Rational& r) : rep_(r - Rational(floor(r))) {}

QmodZ qz_normalize(const Rational& r) { return QmodZ(r); }

int a_const(int j) {
  if (j < 0) throw InvalidInput("a_const: j must be non-negative");
  return j % 2 == 0 ? 1 : 2;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min())
    throw InvalidInput("integer " + z.str() + " out of 64-bit range");
  return z.convert_to<std::int64_t>();
}

}  // namespace tinv
