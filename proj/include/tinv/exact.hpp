#pragma once

// Exact numeric substrate: arbitrary precision integers and rationals, and
// canonical residues in Q/Z.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace tinv {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  return Rational(num, den);
}

/// Largest integer not exceeding r.
Integer floor(const Rational& r);

/// "num/den", den omitted when 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "num/den" or "num". Throws InvalidInput on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Element of Q/Z stored through its representative in [0, 1).
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const Rational& r);
  QmodZ(const Integer& num, const Integer& den) : QmodZ(Rational(num, den)) {}

  const Rational& rep() const { return rep_; }
  Integer numerator() const { return boost::multiprecision::numerator(rep_); }
  Integer denominator() const {
    return boost::multiprecision::denominator(rep_);
  }
  bool is_zero() const { return rep_ == 0; }

  /// Order of the element in Q/Z, i.e. the reduced denominator.
  Integer order() const { return denominator(); }

  QmodZ operator-() const { return QmodZ(-rep_); }
  QmodZ& operator+=(const QmodZ& o) { return *this = QmodZ(rep_ + o.rep_); }
  QmodZ& operator-=(const QmodZ& o) { return *this = QmodZ(rep_ - o.rep_); }
  QmodZ& operator*=(const Integer& m) { return *this = QmodZ(rep_ * m); }

  friend QmodZ operator+(QmodZ a, const QmodZ& b) { return a += b; }
  friend QmodZ operator-(QmodZ a, const QmodZ& b) { return a -= b; }
  friend QmodZ operator*(QmodZ a, const Integer& m) { return a *= m; }
  friend QmodZ operator*(const Integer& m, QmodZ a) { return a *= m; }
  friend QmodZ operator*(QmodZ a, long m) { return a *= Integer(m); }
  friend QmodZ operator*(long m, QmodZ a) { return a *= Integer(m); }

  friend bool operator==(const QmodZ& a, const QmodZ& b) {
    return a.rep_ == b.rep_;
  }
  friend std::strong_ordering operator<=>(const QmodZ& a, const QmodZ& b) {
    if (a.rep_ < b.rep_) return std::strong_ordering::less;
    if (b.rep_ < a.rep_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// True if the element lies in (1/m)Z/Z.
  bool divides_into(const Integer& m) const { return m % denominator() == 0; }

  std::string str() const { return to_string(rep_); }

 private:
  Rational rep_{0};
};

inline std::ostream& operator<<(std::ostream& os, const QmodZ& q) {
  return os << q.str();
}

/// r - floor(r).
QmodZ qz_normalize(const Rational& r);

/// 1 for even j, 2 for odd j. Throws InvalidInput for j < 0.
int a_const(int j);

/// Product of 1..n as an Integer.
Integer factorial(unsigned n);

/// Converts to int64 or throws InvalidInput when out of range.
std::int64_t to_int64(const Integer& z);

}  // namespace tinv
