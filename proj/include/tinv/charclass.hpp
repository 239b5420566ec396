#pragma once

// Characteristic-class series of HP^k and of quaternionic line bundles, and
// the coefficient pairing that evaluates the t-invariant of p_k^* E_c on the
// disc-bundle coboundary of S^{4k-1}. Serves as the series oracle for the
// closed forms in closedforms.hpp.

#include <vector>

#include "tinv/exact.hpp"
#include "tinv/series.hpp"

namespace tinv {

/// A-hat class of the tangent bundle of HP^k as a series in a = -c2(H),
/// truncated at a^k.
struct AhatSeries {
  int k;
  RationalSeries series;
};

AhatSeries ahat_hpk(int k);

/// 2 - ch(E_c) = c2(E_c) ch'(E_c) with c2(E_c) = -c a, i.e.
/// 2 - 2 cosh(sqrt(c a)), truncated at a^order.
RationalSeries two_minus_ch(const Integer& c, int order);

/// t-invariant of p_k^* E_c on S^{4k-1}: -1/a_{k+1} times the a^k
/// coefficient of Ahat(T HP^k) (2 - ch(E_c)). Requires k >= 2.
QmodZ t_pullback_series(const Integer& c, int k);

/// Coefficient of z^{2k} in cosh(2y arsinh(z/2)) as a polynomial in c = y^2.
RationalPolynomial tbar_poly(int k);

/// p_{n,0..n} with cosh(2nx) = sum_m p_{n,m} sinh(x)^{2m}, obtained by
/// matching the even Taylor coefficients of both sides.
std::vector<Rational> cosh_poly_coeffs(int n);

}  // namespace tinv
