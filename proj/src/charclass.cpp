#include "tinv/charclass.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "tinv/errors.hpp"

namespace tinv {

AhatSeries ahat_hpk(int k) {
  if (k < 1) throw InvalidInput("ahat_hpk: k must be at least 1");
  const auto ratio = named_series(SeriesName::sinh_half_ratio, {}, k);
  const auto cosh_half = named_series(SeriesName::cosh_half, {}, k);
  return {k, pow(series_invert(ratio), static_cast<unsigned>(2 * k + 1)) * cosh_half};
}

RationalSeries two_minus_ch(const Integer& c, int order) {
  auto s = named_series(SeriesName::cosh_sqrt_c, {Rational(c)}, order);
  s[0] -= 1;
  return s * Rational(-2);
}

QmodZ t_pullback_series(const Integer& c, int k) {
  if (k < 2) throw InvalidInput("t_pullback_series: k must be at least 2");
  const auto product = ahat_hpk(k).series * two_minus_ch(c, k);
  // The relative group H^*(W_k, S^{4k-1}) is a Q[a]/a^{k+1}; the fundamental
  // class reads off the top coefficient.
  return qz_normalize(-product[k] / Rational(a_const(k + 1)));
}

RationalPolynomial tbar_poly(int k) {
  if (k < 1) throw InvalidInput("tbar_poly: k must be at least 1");
  return cosh_2y_arsinh_poly(2 * k)[2 * k];
}

std::vector<Rational> cosh_poly_coeffs(int n) {
  if (n < 1) throw InvalidInput("cosh_poly_coeffs: n must be at least 1");
  using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

  const int order = 2 * n;
  RationalSeries sinh_x(order);
  for (int i = 1; i <= order; i += 2) sinh_x[i] = Rational(1) / Rational(factorial(i));
  const RationalSeries sinh_sq = sinh_x * sinh_x;

  // basis(j, m) = [x^{2j}] sinh(x)^{2m}; lower unitriangular.
  Matrix basis = Matrix::Zero(n + 1, n + 1);
  Vector rhs(n + 1);
  auto power = RationalSeries::constant(Rational(1), order);
  for (int m = 0; m <= n; ++m) {
    for (int j = 0; j <= n; ++j) basis(j, m) = power[2 * j];
    power *= sinh_sq;
  }
  const Rational two_n(2 * n);
  Rational num = 1;
  for (int j = 0; j <= n; ++j) {
    rhs(j) = num / Rational(factorial(2 * static_cast<unsigned>(j)));
    num *= two_n * two_n;
  }
  const Vector p = basis.triangularView<Eigen::Lower>().solve(rhs);
  return {p.data(), p.data() + p.size()};
}

}  // namespace tinv
