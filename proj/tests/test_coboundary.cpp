#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "generators.hpp"
#include "tinv/coboundary.hpp"

using namespace tinv;
using tinv::testing::random_coboundary;
using tinv::testing::random_vector;

namespace {

QmodZ qz(long num, long den) { return QmodZ(Integer(num), Integer(den)); }

// Floating-point signature; fine for the small well-conditioned matrices used here.
int float_signature(const IntMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
  int s = 0;
  for (double e : es.eigenvalues()) s += e > 0 ? 1 : -1;
  return s;
}

CoboundaryData block_sum(const CoboundaryData& a, const CoboundaryData& b) {
  const auto r = a.rank(), s = b.rank();
  IntMatrix l = IntMatrix::Zero(r + s, r + s);
  l.topLeftCorner(r, r) = a.lambda();
  l.bottomRightCorner(s, s) = b.lambda();
  IntVector p(r + s);
  p << a.p(), b.p();
  return {l, p};
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(snf_cokernel(CoboundaryData::rank_one(7, 1)).invariant_factors == std::vector<Integer>{7});
  const CoboundaryData d23(make_int_matrix({{2, 0}, {0, 3}}), make_int_vector({0, 1}));
  const auto h = snf_cokernel(d23);
  CHECK(h.invariant_factors == std::vector<Integer>{6});
  CHECK(h.order() == 6);
  CHECK(snf_cokernel(CoboundaryData::e8()).invariant_factors.empty());
  const auto s = smith_normal_form(make_int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(s.diagonal(0, 0) == 2);
  CHECK(s.diagonal(1, 1) == 6);
  CHECK(s.diagonal(2, 2) == 12);
}

TEST_CASE("Smith normal form reconstructs on random input") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = dim(rng), n = dim(rng);
    IntMatrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    const auto s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diagonal);
    CHECK(s.left * s.left_inverse == IntMatrix::Identity(m, m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
    for (int i = 0; i + 1 < std::min(m, n); ++i) {
      CHECK(s.diagonal(i, i) >= 0);
      if (s.diagonal(i, i) != 0) CHECK(s.diagonal(i + 1, i + 1) % s.diagonal(i, i) == 0);
      else CHECK(s.diagonal(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("H4 coordinates and lifts are inverse") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cb = random_coboundary(rng, 4, 9);
    const auto h = snf_cokernel(cb);
    const auto x = random_vector(rng, cb.rank(), 20);
    const auto coords = h.coordinates(x);
    CHECK(h.coordinates(h.lift(coords)) == coords);
    // x and x + lambda y represent the same class
    const auto y = random_vector(rng, cb.rank(), 5);
    CHECK(h.coordinates(IntVector(x + cb.lambda() * y)) == coords);
    CHECK(abs(cb.determinant()) == h.order());
  }
}

TEST_CASE("q and t examples") {
  const CoboundaryData cb(make_int_matrix({{2, 0}, {0, 2}}), make_int_vector({2, 2}));
  const auto v = q_t_from_coboundary(cb, make_int_vector({1, 0}));
  CHECK(v.q == qz(3, 4));
  CHECK(v.t == qz(1, 16));
  const auto zero = q_t_from_coboundary(cb, make_int_vector({0, 0}));
  CHECK(zero.q.is_zero());
  CHECK(zero.t.is_zero());
}

TEST_CASE("linking example") {
  const CoboundaryData cb(make_int_matrix({{2, 0}, {0, 3}}), make_int_vector({0, 1}));
  CHECK(linking(cb, make_int_vector({1, 1}), make_int_vector({1, 1})) == qz(5, 6));
}

TEST_CASE("q, t and linking laws on random coboundaries") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto cb = random_coboundary(rng, 4, 9);
    const auto r = cb.rank();
    const auto x = random_vector(rng, r, 9), y = random_vector(rng, r, 9), z = random_vector(rng, r, 3);
    const auto qx = q_t_from_coboundary(cb, x), qy = q_t_from_coboundary(cb, y);
    const auto qxy = q_t_from_coboundary(cb, IntVector(x + y));
    CHECK(qx.q == qx.t * 12);
    CHECK(qxy.q - qx.q - qy.q == linking(cb, x, y));
    CHECK(linking(cb, x, y) == linking(cb, y, x));
    CHECK(q_t_from_coboundary(cb, IntVector(x + cb.lambda() * z)).q == qx.q);
    const auto shift = q_t_from_coboundary(cb, IntVector(x + cb.lambda() * z)).t - qx.t;
    CHECK(shift.divides_into(12));
    CHECK((linking(cb, x, x) * Integer(cb.determinant())).is_zero());
  }
}

TEST_CASE("signature examples") {
  CHECK(signature(CoboundaryData::e8().lambda()) == 8);
  CHECK(signature(make_int_matrix({{1, 0}, {0, -1}})) == 0);
  CHECK(signature(make_int_matrix({{0, 1}, {1, 0}})) == 0);
  CHECK(signature(make_int_matrix({{-5}})) == -1);
  CHECK_THROWS_AS(signature(make_int_matrix({{1, 2}, {3, 4}})), InvalidInput);
  CHECK_THROWS_AS(signature(make_int_matrix({{1, 1}, {1, 1}})), InvalidInput);
  CHECK_THROWS_AS(signature(make_int_matrix({{1, 1, 0}})), InvalidInput);
}

TEST_CASE("exact signature agrees with eigenvalues") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cb = random_coboundary(rng, 4, 9);
    CHECK(signature(cb.lambda()) == float_signature(cb.lambda()));
  }
}

TEST_CASE("mu_hat examples") {
  CHECK(mu_hat(CoboundaryData::e8()) == qz(1, 28));
  CHECK(mu_hat(CoboundaryData::rank_one(1, 1)).is_zero());
  CHECK(mu_hat(CoboundaryData::rank_one(1, 3)) == qz(27, 28));
}

TEST_CASE("mu_hat is unchanged by adding (+1) or (-1) summands") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto cb = random_coboundary(rng, 3, 6);
    CHECK(mu_hat(block_sum(cb, CoboundaryData::rank_one(1, 1))) == mu_hat(cb));
    CHECK(mu_hat(block_sum(cb, CoboundaryData::rank_one(-1, 1))) == mu_hat(cb));
  }
}

TEST_CASE("coboundary validation") {
  CHECK_THROWS_AS(CoboundaryData(make_int_matrix({{1, 2}, {3, 4}}), make_int_vector({1, 0})), InvalidInput);
  CHECK_THROWS_AS(CoboundaryData(make_int_matrix({{2}}), make_int_vector({1})), InvalidInput);
  CHECK_THROWS_AS(CoboundaryData(make_int_matrix({{0}}), make_int_vector({0})), InvalidInput);
  CHECK_THROWS_AS(CoboundaryData(make_int_matrix({{1}}), make_int_vector({1, 1})), InvalidInput);
  CHECK(CoboundaryData::e8().determinant() == 1);
}

TEST_CASE("coboundary JSON round trip") {
  const auto e8 = CoboundaryData::e8();
  const auto back = CoboundaryData::from_json(e8.to_json());
  CHECK(back.lambda() == e8.lambda());
  CHECK(back.p() == e8.p());
  const auto big = CoboundaryData::from_json(nlohmann::json::parse(
      R"({"lambda": [["100000000000000000001"]], "p": ["3"]})"));
  CHECK(big.determinant() == Integer("100000000000000000001"));
  CHECK_THROWS_AS(CoboundaryData::from_json(nlohmann::json::parse(R"({"lambda": [[1]]})")), InvalidInput);
  CHECK_THROWS_AS(CoboundaryData::from_json(nlohmann::json::parse(R"({"lambda": [[1, 2]], "p": [1]})")),
                  InvalidInput);
  CHECK_THROWS_AS(CoboundaryData::from_json(nlohmann::json::parse(R"({"lambda": [["x"]], "p": [1]})")),
                  InvalidInput);
  CHECK_THROWS_AS(CoboundaryData::load("/nonexistent/file.json"), InvalidInput);
}
