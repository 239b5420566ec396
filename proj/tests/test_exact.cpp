#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tinv/errors.hpp"
#include "tinv/exact.hpp"

using namespace tinv;

TEST_CASE("qz_normalize examples") {
  CHECK(qz_normalize(Rational(61248, 720)) == QmodZ(Integer(1), Integer(15)));
  CHECK(qz_normalize(Rational(-1, 36)).str() == "35/36");
  CHECK(qz_normalize(Rational(5)).is_zero());
  CHECK(qz_normalize(Rational(-7, 2)).str() == "1/2");
}

TEST_CASE("floor rounds toward negative infinity") {
  CHECK(tinv::floor(Rational(7, 2)) == 3);
  CHECK(tinv::floor(Rational(-7, 2)) == -4);
  CHECK(tinv::floor(Rational(-4)) == -4);
}

TEST_CASE("a_const") {
  CHECK(a_const(0) == 1);
  CHECK(a_const(2) == 1);
  CHECK(a_const(3) == 2);
  CHECK_THROWS_AS(a_const(-1), InvalidInput);
  for (int k = 0; k < 50; ++k) CHECK(a_const(k) * a_const(k + 1) == 2);
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("+12") == 12);
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/"), InvalidInput);
}

TEST_CASE("QmodZ arithmetic") {
  const QmodZ a(Integer(3), Integer(4));
  const QmodZ b(Integer(1), Integer(2));
  CHECK((a + b).str() == "1/4");
  CHECK((b - a).str() == "3/4");
  CHECK((-a).str() == "1/4");
  CHECK((a * 6).str() == "1/2");
  CHECK(a.order() == 4);
  CHECK(a.divides_into(12));
  CHECK_FALSE(a.divides_into(6));
}

TEST_CASE("qz_normalize is a homomorphism onto [0,1) with kernel Z") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    const Rational s(num(rng), den(rng));
    const QmodZ q = qz_normalize(r);
    CHECK(q.rep() >= 0);
    CHECK(q.rep() < 1);
    CHECK(qz_normalize(r + s) == q + qz_normalize(s));
    CHECK(q.is_zero() == (boost::multiprecision::denominator(r) == 1));
  }
}
