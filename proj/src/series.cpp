#include "tinv/series.hpp"

#include <string>

namespace tinv {

RationalSeries series_invert(const RationalSeries& s) {
  if (s[0] == 0) throw InvalidInput("series_invert: constant term is zero");
  const int order = s.order();
  RationalSeries inv(order);
  inv[0] = Rational(1) / s[0];
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) acc += s[i] * inv[n - i];
    inv[n] = -acc * inv[0];
  }
  return inv;
}

RationalSeries integrate(const RationalSeries& s) {
  RationalSeries r(s.order());
  for (int i = 1; i <= s.order(); ++i) r[i] = s[i - 1] / Rational(i);
  return r;
}

SeriesName parse_series_name(std::string_view name) {
  if (name == "sinh_half_ratio") return SeriesName::sinh_half_ratio;
  if (name == "cosh_half") return SeriesName::cosh_half;
  if (name == "cosh_sqrt_c") return SeriesName::cosh_sqrt_c;
  if (name == "arsinh") return SeriesName::arsinh;
  if (name == "cosh_2y_arsinh") return SeriesName::cosh_2y_arsinh;
  throw InvalidInput("unknown series '" + std::string(name) + "'");
}

namespace {

// sum_m (x a)^m / (2m + shift)!
RationalSeries even_part_series(const Rational& x, unsigned shift, int order) {
  RationalSeries s(order);
  Rational power = 1;
  for (int m = 0; m <= order; ++m) {
    s[m] = power / Rational(factorial(2 * static_cast<unsigned>(m) + shift));
    power *= x;
  }
  return s;
}

// (1 + z^2)^(-1/2) by the binomial series, integrated.
RationalSeries arsinh_series(int order) {
  RationalSeries integrand(order);
  Rational binom = 1;  // binom(-1/2, m)
  for (int m = 0; 2 * m <= order; ++m) {
    integrand[2 * m] = binom;
    binom *= (Rational(-1, 2) - m) / Rational(m + 1);
  }
  return integrate(integrand);
}

}  // namespace

TruncatedSeries<RationalPolynomial> cosh_2y_arsinh_poly(int order) {
  // cosh(2y w) = sum_m (4 y^2)^m w^(2m) / (2m)!, w = arsinh(z/2).
  const RationalSeries w = arsinh_series(order).rescaled(Rational(1, 2));
  TruncatedSeries<RationalPolynomial> outer(order);
  for (int m = 0; 2 * m <= order; ++m) {
    Rational coeff = Rational(Integer(1) << (2 * m)) / Rational(factorial(2 * static_cast<unsigned>(m)));
    outer[2 * m] = RationalPolynomial::monomial(static_cast<std::size_t>(m), coeff);
  }
  return series_compose(outer, lift<RationalPolynomial>(w));
}

RationalSeries named_series(SeriesName name, const SeriesParams& params, int order) {
  switch (name) {
    case SeriesName::sinh_half_ratio:
      return even_part_series(Rational(1, 4), 1, order);
    case SeriesName::cosh_half:
      return even_part_series(Rational(1, 4), 0, order);
    case SeriesName::cosh_sqrt_c:
      return even_part_series(params.c, 0, order);
    case SeriesName::arsinh:
      return arsinh_series(order);
    case SeriesName::cosh_2y_arsinh: {
      const auto poly = cosh_2y_arsinh_poly(order);
      RationalSeries s(order);
      for (int i = 0; i <= order; ++i) s[i] = poly[i](params.c);
      return s;
    }
  }
  throw InvalidInput("unknown series");
}

RationalSeries named_series(std::string_view name, const SeriesParams& params, int order) {
  return named_series(parse_series_name(name), params, order);
}

}  // namespace tinv
