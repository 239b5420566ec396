#pragma once

// Truncated formal power series in one variable, templated on the
// coefficient ring, plus the generating series used to evaluate
// characteristic classes of HP^k.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tinv/errors.hpp"
#include "tinv/exact.hpp"

namespace tinv {

/// Dense univariate polynomial; trailing zero coefficients are trimmed so
/// equality is structural.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) : coeffs_{std::move(constant)} { trim(); }
  Polynomial(int constant) : Polynomial(T(constant)) {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  std::span<const T> coeffs() const { return coeffs_; }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Power series truncated after degree `order`; every operation discards
/// terms beyond that degree.
template <typename T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(checked(order) + 1, T(0)) {}
  TruncatedSeries(std::vector<T> coeffs, int order)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked(order) + 1, T(0));
  }

  static TruncatedSeries constant(T c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  /// The series variable itself.
  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](std::size_t i) const { return coeffs_.at(i); }
  T& operator[](std::size_t i) { return coeffs_.at(i); }
  std::span<const T> coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  TruncatedSeries& operator*=(const T& scalar) {
    for (auto& c : coeffs_) c = c * scalar;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }
  friend TruncatedSeries operator*(const T& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Substitutes scale*x for x.
  TruncatedSeries rescaled(const T& scale) const {
    TruncatedSeries r = *this;
    T power(1);
    for (auto& c : r.coeffs_) {
      c = c * power;
      power = power * scale;
    }
    return r;
  }

  /// Same series viewed at another truncation order.
  TruncatedSeries with_order(int order) const { return TruncatedSeries(coeffs_, order); }

 private:
  static std::size_t checked(int order) {
    if (order < 0) throw InvalidInput("series order must be non-negative");
    return static_cast<std::size_t>(order);
  }
  void same_order(const TruncatedSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw InvalidInput("series truncation orders differ");
  }
  std::vector<T> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

template <typename T>
TruncatedSeries<T> pow(const TruncatedSeries<T>& base, unsigned exponent) {
  auto result = TruncatedSeries<T>::constant(T(1), base.order());
  auto square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

/// outer(inner(x)) truncated at the common order. The inner series must have
/// zero constant term.
template <typename T>
TruncatedSeries<T> series_compose(const TruncatedSeries<T>& outer,
                                  const TruncatedSeries<T>& inner) {
  if (inner[0] != T(0))
    throw InvalidInput("series_compose: inner series has nonzero constant term");
  const int order = std::max(outer.order(), inner.order());
  const auto in = inner.with_order(order);
  const auto out = outer.with_order(order);
  auto acc = TruncatedSeries<T>(order);
  for (int i = out.order(); i >= 0; --i) {
    acc = acc * in;
    acc[0] += out[static_cast<std::size_t>(i)];
  }
  return acc;
}

/// Lifts each coefficient into another ring (e.g. rationals into
/// polynomials with rational coefficients).
template <typename To, typename From>
TruncatedSeries<To> lift(const TruncatedSeries<From>& s) {
  TruncatedSeries<To> r(s.order());
  for (int i = 0; i <= s.order(); ++i) r[static_cast<std::size_t>(i)] = To(s[static_cast<std::size_t>(i)]);
  return r;
}

/// Multiplicative inverse up to the truncation order. Throws InvalidInput
/// when the constant term vanishes.
RationalSeries series_invert(const RationalSeries& s);

/// Term-by-term antiderivative with zero constant term; the top coefficient
/// is dropped.
RationalSeries integrate(const RationalSeries& s);

enum class SeriesName { sinh_half_ratio, cosh_half, cosh_sqrt_c, arsinh, cosh_2y_arsinh };

/// Throws InvalidInput for unknown names.
SeriesName parse_series_name(std::string_view name);

struct SeriesParams {
  /// Multiplier c in cosh(sqrt(c a)), or the value of y^2 in
  /// cosh(2y arsinh(z/2)).
  Rational c{0};
};

/// Generating series in the variable a (or z for arsinh and
/// cosh_2y_arsinh) truncated at degree `order`:
///   sinh_half_ratio  sum (a/4)^m / (2m+1)!   = sinh(sqrt(a)/2) / (sqrt(a)/2)
///   cosh_half        sum (a/4)^m / (2m)!     = cosh(sqrt(a)/2)
///   cosh_sqrt_c      sum (c a)^m / (2m)!     = cosh(sqrt(c a))
///   arsinh           odd series of arsinh(z)
///   cosh_2y_arsinh   cosh(2y arsinh(z/2)) with y^2 = params.c
RationalSeries named_series(SeriesName name, const SeriesParams& params, int order);
RationalSeries named_series(std::string_view name, const SeriesParams& params, int order);

/// cosh(2y arsinh(z/2)) as a series in z whose coefficients are
/// polynomials in c = y^2.
TruncatedSeries<RationalPolynomial> cosh_2y_arsinh_poly(int order);

}  // namespace tinv
