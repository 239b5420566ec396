#include "tinv/coboundary.hpp"

#include <fstream>
#include <limits>

namespace tinv {

namespace {

Integer json_integer(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (boost::multiprecision::denominator(r) != 1)
      throw InvalidInput("coboundary JSON: expected an integer, got " + j.dump());
    return boost::multiprecision::numerator(r);
  }
  throw InvalidInput("coboundary JSON: expected an integer, got " + j.dump());
}

nlohmann::json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return z.convert_to<long long>();
  return z.str();
}

RatVector to_rational(const IntVector& x) {
  RatVector r(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) r(i) = Rational(x(i));
  return r;
}

Rational dot(const IntVector& x, const RatVector& v) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += Rational(x(i)) * v(i);
  return s;
}

void check_length(const CoboundaryData& cb, const IntVector& x) {
  if (x.size() != cb.rank())
    throw InvalidInput("vector length " + std::to_string(x.size()) + " does not match rank " +
                       std::to_string(cb.rank()));
}

}  // namespace

CoboundaryData::CoboundaryData(IntMatrix lambda, IntVector p)
    : lambda_(std::move(lambda)), p_(std::move(p)) {
  const Eigen::Index r = lambda_.rows();
  if (lambda_.cols() != r) throw InvalidInput("coboundary: lambda must be square");
  if (p_.size() != r) throw InvalidInput("coboundary: p must have length rank(lambda)");
  if (lambda_ != lambda_.transpose()) throw InvalidInput("coboundary: lambda must be symmetric");
  for (Eigen::Index i = 0; i < r; ++i)
    if ((lambda_(i, i) - p_(i)) % 2 != 0)
      throw InvalidInput("coboundary: p is not characteristic (lambda_ii != p_i mod 2 at i = " +
                         std::to_string(i) + ")");

  const auto snf = smith_normal_form(lambda_);
  Integer det = 1;
  for (Eigen::Index i = 0; i < r; ++i) det *= snf.diagonal(i, i);
  if (det == 0) throw InvalidInput("coboundary: lambda is singular");

  // lambda^{-1} = right * diag^{-1} * left
  RatMatrix dinv_left(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      dinv_left(i, j) = Rational(snf.left(i, j), snf.diagonal(i, i));
  RatMatrix right(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) right(i, j) = Rational(snf.right(i, j));
  inverse_ = right * dinv_left;

  // The Smith form only gives |det|; the sign comes from an exact LU.
  det_ = r == 0 ? Integer(1) : Integer(boost::multiprecision::numerator(
                                  lambda_.cast<Rational>().fullPivLu().determinant()));
}

CoboundaryData CoboundaryData::rank_one(const Integer& n, const Integer& p) {
  IntMatrix l(1, 1);
  l(0, 0) = n;
  IntVector v(1);
  v(0) = p;
  return {std::move(l), std::move(v)};
}

CoboundaryData CoboundaryData::e8() {
  IntMatrix l = make_int_matrix({{2, -1, 0, 0, 0, 0, 0, 0},
                                 {-1, 2, -1, 0, 0, 0, 0, 0},
                                 {0, -1, 2, -1, 0, 0, 0, -1},
                                 {0, 0, -1, 2, -1, 0, 0, 0},
                                 {0, 0, 0, -1, 2, -1, 0, 0},
                                 {0, 0, 0, 0, -1, 2, -1, 0},
                                 {0, 0, 0, 0, 0, -1, 2, 0},
                                 {0, 0, -1, 0, 0, 0, 0, 2}});
  return {std::move(l), IntVector::Zero(8)};
}

CoboundaryData CoboundaryData::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("p"))
    throw InvalidInput("coboundary JSON must be an object with keys \"lambda\" and \"p\"");
  const auto& rows = j.at("lambda");
  const auto& p = j.at("p");
  if (!rows.is_array() || !p.is_array())
    throw InvalidInput("coboundary JSON: \"lambda\" and \"p\" must be arrays");
  const auto r = static_cast<Eigen::Index>(rows.size());
  IntMatrix lambda(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != r)
      throw InvalidInput("coboundary JSON: \"lambda\" must be a square array of arrays");
    for (Eigen::Index k = 0; k < r; ++k) lambda(i, k) = json_integer(row.at(static_cast<std::size_t>(k)));
  }
  IntVector pv(static_cast<Eigen::Index>(p.size()));
  for (Eigen::Index i = 0; i < pv.size(); ++i) pv(i) = json_integer(p.at(static_cast<std::size_t>(i)));
  return {std::move(lambda), std::move(pv)};
}

CoboundaryData CoboundaryData::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open coboundary file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed coboundary file " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json CoboundaryData::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < rank(); ++k) row.push_back(integer_json(lambda_(i, k)));
    rows.push_back(std::move(row));
  }
  nlohmann::json p = nlohmann::json::array();
  for (Eigen::Index i = 0; i < rank(); ++i) p.push_back(integer_json(p_(i)));
  return {{"lambda", rows}, {"p", p}};
}

Integer H4Presentation::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

std::vector<Integer> H4Presentation::coordinates(const IntVector& x) const {
  const IntVector y = left * x;
  std::vector<Integer> coords;
  coords.reserve(invariant_factors.size());
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const Integer& d = invariant_factors[i];
    Integer c = y(first_nontrivial + static_cast<Eigen::Index>(i)) % d;
    if (c < 0) c += d;
    coords.push_back(std::move(c));
  }
  return coords;
}

IntVector H4Presentation::lift(const std::vector<Integer>& coords) const {
  if (coords.size() != invariant_factors.size())
    throw InvalidInput("cokernel coordinates have the wrong length");
  IntVector e = IntVector::Zero(left.rows());
  for (std::size_t i = 0; i < coords.size(); ++i)
    e(first_nontrivial + static_cast<Eigen::Index>(i)) = coords[i];
  return left_inverse * e;
}

H4Presentation snf_cokernel(const CoboundaryData& cb) {
  auto snf = smith_normal_form(cb.lambda());
  H4Presentation h;
  const Eigen::Index r = cb.rank();
  h.first_nontrivial = r;
  for (Eigen::Index i = 0; i < r; ++i) {
    const Integer& d = snf.diagonal(i, i);
    if (d == 0) throw InvalidInput("coboundary: lambda is singular");
    if (d != 1) {
      if (h.invariant_factors.empty()) h.first_nontrivial = i;
      h.invariant_factors.push_back(d);
    }
  }
  h.left = std::move(snf.left);
  h.left_inverse = std::move(snf.left_inverse);
  h.right = std::move(snf.right);
  return h;
}

QuadraticValues q_t_from_coboundary(const CoboundaryData& cb, const IntVector& x) {
  check_length(cb, x);
  const RatVector v = cb.inverse() * to_rational(x);
  const Rational s = dot(x, v) + dot(cb.p(), v);
  return {qz_normalize(s / 2), qz_normalize(s / 24)};
}

QmodZ linking(const CoboundaryData& cb, const IntVector& x, const IntVector& y) {
  check_length(cb, x);
  check_length(cb, y);
  return qz_normalize(dot(x, cb.inverse() * to_rational(y)));
}

QmodZ mu_hat(const CoboundaryData& cb) {
  const Rational defect = dot(cb.p(), cb.inverse() * to_rational(cb.p()));
  return qz_normalize((Rational(signature(cb.lambda())) - defect) / 224);
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

IntMatrix make_int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw InvalidInput("ragged matrix literal");
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace tinv
