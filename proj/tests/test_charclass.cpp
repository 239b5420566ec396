#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tinv/charclass.hpp"
#include "tinv/closedforms.hpp"

using namespace tinv;

namespace {

// prod_{j<k} (c - j^2) / (2k)! expanded into coefficients in c.
RationalPolynomial product_formula(int k) {
  RationalPolynomial p(Rational(1));
  for (int j = 0; j < k; ++j)
    p *= RationalPolynomial(std::vector<Rational>{Rational(-j * j), Rational(1)});
  return p * RationalPolynomial(Rational(1) / Rational(factorial(2 * static_cast<unsigned>(k))));
}

}  // namespace

TEST_CASE("ahat_hpk examples") {
  const auto a2 = ahat_hpk(2);
  CHECK(a2.series[0] == 1);
  CHECK(a2.series[1] == Rational(-1, 12));
  CHECK(a2.series[2] == 0);
  CHECK(ahat_hpk(1).series[1] == 0);
  CHECK_THROWS_AS(ahat_hpk(0), InvalidInput);
}

TEST_CASE("ahat_hpk normalisation for k <= 8") {
  for (int k = 1; k <= 8; ++k) {
    const auto a = ahat_hpk(k);
    CHECK(a.k == k);
    CHECK(a.series.order() == k);
    CHECK(a.series[1] == -Rational(2 * k - 2, 24));
    CHECK(a.series[static_cast<std::size_t>(k)] == 0);
  }
}

TEST_CASE("ahat of HP^2 matches 1 - p1/24 + (7 p1^2 - 4 p2)/5760 with p = 1 + 2a + 7a^2") {
  const Rational p1 = 2, p2 = 7;
  const auto a = ahat_hpk(2).series;
  CHECK(a[1] == -p1 / 24);
  CHECK(a[2] == (7 * p1 * p1 - 4 * p2) / 5760);
}

TEST_CASE("two_minus_ch examples") {
  CHECK(two_minus_ch(1, 3)[1] == -1);
  CHECK(two_minus_ch(2, 3)[2] == Rational(-1, 3));
  CHECK(two_minus_ch(5, 3)[0] == 0);
  // (2 - ch) / (-c a) is ch' = 1 + c a / 12 + ... i.e. 1 - c2/12 with c2 = -c a.
  for (int c : {1, 2, 7, -3}) {
    const auto s = two_minus_ch(c, 4);
    CHECK(s[1] / Rational(-c) == 1);
    CHECK(s[2] / Rational(-c) == Rational(c, 12));
  }
}

TEST_CASE("t_pullback_series examples") {
  CHECK(t_pullback_series(2, 2).str() == "1/12");
  CHECK(t_pullback_series(33, 3).str() == "1/15");
  CHECK(t_pullback_series(0, 5).is_zero());
  CHECK_THROWS_AS(t_pullback_series(3, 1), InvalidInput);
}

TEST_CASE("tbar_poly examples") {
  CHECK(tbar_poly(1) == RationalPolynomial(std::vector<Rational>{0, Rational(1, 2)}));
  CHECK(tbar_poly(2) == RationalPolynomial(std::vector<Rational>{0, Rational(-1, 24), Rational(1, 24)}));
  CHECK(tbar_poly(3)(Rational(4)) == 0);
}

TEST_CASE("tbar_poly equals the product formula and takes 1/2 at c = k^2") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(tbar_poly(k) == product_formula(k));
    CHECK(tbar_poly(k)(Rational(k * k)) == Rational(1, 2));
    for (int n = 0; n < k; ++n) CHECK(tbar_poly(k)(Rational(n * n)) == 0);
  }
}

TEST_CASE("cosh_poly_coeffs examples") {
  CHECK(cosh_poly_coeffs(1) == std::vector<Rational>{1, 2});
  CHECK(cosh_poly_coeffs(2) == std::vector<Rational>{1, 8, 8});
  CHECK(cosh_poly_coeffs(3).back() == 32);
}

TEST_CASE("cosh polynomial coefficients are integers tied to tbar") {
  for (int n = 1; n <= 8; ++n) {
    const auto p = cosh_poly_coeffs(n);
    REQUIRE(p.size() == static_cast<std::size_t>(n) + 1);
    CHECK(p.front() == 1);
    CHECK(p.back() == Rational(Integer(1) << (2 * n - 1)));
    for (const auto& v : p) CHECK(boost::multiprecision::denominator(v) == 1);
  }
  for (int n = 1; n <= 6; ++n) {
    const auto p = cosh_poly_coeffs(n);
    for (int k = 1; k <= n; ++k)
      CHECK(Rational(Integer(1) << (2 * k)) * tbar_poly(k)(Rational(n * n)) == p[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("series oracle agrees with the closed form on a spot grid") {
  for (int k = 2; k <= 6; ++k)
    for (int c : {-17, -1, 0, 1, 2, 9, 25, 33, 40, 121}) {
      CAPTURE(k);
      CAPTURE(c);
      CHECK(t_pullback_series(c, k) == t_pullback_closed(c, k));
    }
}
