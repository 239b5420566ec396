#pragma once

// Extrinsic evaluation of the quadratic linking function, t-invariant,
// linking form and Eells-Kuiper defect of a rational homology 7-sphere M
// from a spin coboundary W, modelled by the intersection form on H^4(W)
// and the spin characteristic class p_W.

#include <cmath>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <json.hpp>

#include "tinv/errors.hpp"
#include "tinv/exact.hpp"

namespace tinv {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// left * A * right = diagonal, with left/right unimodular and the diagonal
/// entries non-negative and forming a divisibility chain.
template <typename Scalar>
struct SmithDecomposition {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix left;
  Matrix left_inverse;
  Matrix right;
  Matrix diagonal;
};

template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Matrix = typename SmithDecomposition<Scalar>::Matrix;
  using Index = Eigen::Index;
  using std::abs;

  const Index m = a.rows();
  const Index n = a.cols();
  Matrix d = a;
  Matrix u = Matrix::Identity(m, m);
  Matrix u_inv = Matrix::Identity(m, m);
  Matrix v = Matrix::Identity(n, n);

  // Row operation row_i -= q * row_t, mirrored on the transforms.
  auto row_axpy = [&](Index i, Index t, const Scalar& q) {
    d.row(i) -= q * d.row(t);
    u.row(i) -= q * u.row(t);
    u_inv.col(t) += q * u_inv.col(i);
  };
  auto col_axpy = [&](Index j, Index t, const Scalar& q) {
    d.col(j) -= q * d.col(t);
    v.col(j) -= q * v.col(t);
  };

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      Index pr = -1, pc = -1;
      for (Index j = t; j < n; ++j)
        for (Index i = t; i < m; ++i)
          if (d(i, j) != 0 && (pr < 0 || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return {std::move(u), std::move(u_inv), std::move(v), std::move(d)};
      if (pr != t) {
        d.row(t).swap(d.row(pr));
        u.row(t).swap(u.row(pr));
        u_inv.col(t).swap(u_inv.col(pr));
      }
      if (pc != t) {
        d.col(t).swap(d.col(pc));
        v.col(t).swap(v.col(pc));
      }

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_axpy(i, t, Scalar(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_axpy(j, t, Scalar(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      // row_t += row_bad brings a non-multiple into the pivot row.
      d.row(t) += d.row(bad);
      u.row(t) += u.row(bad);
      u_inv.col(bad) -= u_inv.col(t);
    }
    if (d(t, t) < 0) {
      d.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
      u_inv.col(t) *= Scalar(-1);
    }
  }
  return {std::move(u), std::move(u_inv), std::move(v), std::move(d)};
}

/// Number of positive minus number of negative eigenvalues of a symmetric
/// nondegenerate matrix, by exact congruence diagonalization over Q.
/// Throws InvalidInput for non-square, non-symmetric or singular input.
template <typename Derived>
int signature(const Eigen::MatrixBase<Derived>& lambda) {
  using Index = Eigen::Index;
  if (lambda.rows() != lambda.cols()) throw InvalidInput("signature: matrix is not square");
  const Index r = lambda.rows();
  RatMatrix a(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) a(i, j) = Rational(lambda(i, j));
  if (a != a.transpose()) throw InvalidInput("signature: matrix is not symmetric");

  int sig = 0;
  for (Index i = 0; i < r; ++i) {
    if (a(i, i) == 0) {
      for (Index j = i + 1; j < r; ++j)
        if (a(j, j) != 0) {
          a.row(i).swap(a.row(j));
          a.col(i).swap(a.col(j));
          break;
        }
    }
    if (a(i, i) == 0) {
      // All remaining diagonal entries vanish: fold in a partner of a
      // hyperbolic pair, turning the pivot into 2 a(i, j).
      Index partner = -1;
      for (Index j = i + 1; j < r; ++j)
        if (a(i, j) != 0) {
          partner = j;
          break;
        }
      if (partner < 0) throw InvalidInput("signature: matrix is singular");
      a.row(i) += a.row(partner);
      a.col(i) += a.col(partner);
    }
    const Rational pivot = a(i, i);
    for (Index j = i + 1; j < r; ++j) {
      if (a(j, i) == 0) continue;
      const Rational f = a(j, i) / pivot;
      a.row(j) -= f * a.row(i);
      a.col(j) -= f * a.col(i);
    }
    sig += pivot > 0 ? 1 : -1;
  }
  return sig;
}

/// Intersection form lambda on H^4(W) and spin class p_W; describes M = dW.
class CoboundaryData {
 public:
  /// Throws InvalidInput unless lambda is square, symmetric and nonsingular,
  /// p has matching length, and lambda_ii = p_i mod 2 for every i.
  CoboundaryData(IntMatrix lambda, IntVector p);

  /// Rank-one form (n) with class (p): the disc bundle W_{n,p} over S^4.
  static CoboundaryData rank_one(const Integer& n, const Integer& p);
  static CoboundaryData e8();

  /// {"lambda": [[int]], "p": [int]}; integers may also be decimal strings.
  static CoboundaryData from_json(const nlohmann::json& j);
  static CoboundaryData load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  const IntMatrix& lambda() const { return lambda_; }
  const IntVector& p() const { return p_; }
  Eigen::Index rank() const { return lambda_.rows(); }
  const Integer& determinant() const { return det_; }
  /// Exact lambda^{-1}.
  const RatMatrix& inverse() const { return inverse_; }

 private:
  IntMatrix lambda_;
  IntVector p_;
  Integer det_;
  RatMatrix inverse_;
};

/// H^4(M) = coker(lambda) = sum Z/d_i over the nontrivial invariant factors.
struct H4Presentation {
  std::vector<Integer> invariant_factors;
  /// left * lambda * right is in Smith normal form.
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  /// Row of `left` carrying the first nontrivial factor.
  Eigen::Index first_nontrivial = 0;

  Integer order() const;
  /// Coordinates in sum Z/d_i of the class of an integer vector.
  std::vector<Integer> coordinates(const IntVector& x) const;
  /// Integer vector representing the class with the given coordinates.
  IntVector lift(const std::vector<Integer>& coords) const;
};

H4Presentation snf_cokernel(const CoboundaryData& cb);

struct QuadraticValues {
  QmodZ q;
  QmodZ t;
};

/// With v = lambda^{-1} x: q = (x.v + p.v)/2 and t = (x.v + p.v)/24 mod 1.
QuadraticValues q_t_from_coboundary(const CoboundaryData& cb, const IntVector& x);

/// b(x, y) = x . lambda^{-1} y mod 1.
QmodZ linking(const CoboundaryData& cb, const IntVector& x, const IntVector& y);

/// (sigma(lambda) - p . lambda^{-1} p) / 224 mod 1; the E8 form with p = 0
/// gives 1/28.
QmodZ mu_hat(const CoboundaryData& cb);

IntVector make_int_vector(std::initializer_list<long> values);
IntMatrix make_int_matrix(std::initializer_list<std::initializer_list<long>> rows);

}  // namespace tinv
