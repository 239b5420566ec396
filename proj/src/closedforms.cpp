#include "tinv/closedforms.hpp"


#include "tinv/errors.hpp"

namespace tinv {

namespace {

// prod_{j<k} (c - j^2)
Integer falling_square_product(const Integer& c, int k) {
  Integer prod = 1;
  for (int j = 0; j < k; ++j) prod *= c - Integer(j) * j;
  return prod;
}

bool is_odd(const Integer& z) { return (z % 2) != 0; }

}  // namespace

QmodZ t_pullback_closed(const Integer& c, int k) {
  if (k < 2) throw InvalidInput("t_pullback_closed: k must be at least 2");
  return QmodZ(a_const(k) * falling_square_product(c, k), factorial(2 * static_cast<unsigned>(k)));
}

FgVerdict fg_admissible(const Integer& c, int k) {
  for (int j = 2; j <= k; ++j) {
    const Integer num = a_const(j) * falling_square_product(c, j);
    if (num % factorial(2 * static_cast<unsigned>(j)) != 0) return {j};
  }
  return {};
}

SphereBundle7::SphereBundle7(Integer n, Integer p) : n_(std::move(n)), p_(std::move(p)) {
  if (n_ == 0) throw InvalidInput("sphere bundle: Euler number n must be nonzero");
  if (is_odd(n_ - p_))
    throw InvalidInput("sphere bundle: parity violation, p must be congruent to n mod 2");
}

SphereBundleInvariants sphere_bundle_invariants(const SphereBundle7& m, const Integer& k) {
  const Integer& n = m.n();
  const Integer& p = m.p();
  const Integer kpk = k * (p + k);
  const Rational sign_n = n > 0 ? 1 : -1;
  return {
      .t = QmodZ(kpk, 24 * n),
      .q = QmodZ(kpk, 2 * n),
      .b_kk = QmodZ(k * k, n),
      .mu = qz_normalize((sign_n - Rational(p * p, n)) / 224),
  };
}

GwzManifold::GwzManifold(Integer p_minus, Integer q_minus, Integer p_plus, Integer q_plus)
    : p_minus_(std::move(p_minus)),
      q_minus_(std::move(q_minus)),
      p_plus_(std::move(p_plus)),
      q_plus_(std::move(q_plus)) {
  for (const Integer* v : {&p_minus_, &q_minus_, &p_plus_, &q_plus_}) {
    if (*v <= 0 || !is_odd(*v))
      throw InvalidInput("GWZ manifold: parameters must be positive odd integers");
  }
  if (boost::multiprecision::gcd(p_minus_, q_minus_) != 1 || boost::multiprecision::gcd(p_plus_, q_plus_) != 1)
    throw InvalidInput("GWZ manifold: each pair (p, q) must be coprime");
  const Integer diff = p_minus_ * p_minus_ * q_plus_ * q_plus_ - p_plus_ * p_plus_ * q_minus_ * q_minus_;
  if (diff == 0) throw InvalidInput("GWZ manifold: H^4 would be infinite (n = 0)");
  if (diff % 8 != 0) throw InvalidInput("GWZ manifold: derived order is not an integer");
  n_ = abs(diff) / 8;
}

GwzManifold GwzManifold::positively_curved(const Integer& n) {
  if (n < 1) throw InvalidInput("P_n requires n >= 1");
  return GwzManifold(1, 1, 2 * n - 1, 2 * n + 1);
}

QmodZ t_gwz(const GwzManifold& m, const Integer& k, SeifertFibration fibration) {
  const bool first = fibration == SeifertFibration::first;
  const Integer& minus = first ? m.p_minus() : m.q_minus();
  const Integer& plus = first ? m.p_plus() : m.q_plus();
  const Integer& n = m.n();
  const Integer m2 = minus * minus;
  const Integer p2 = plus * plus;
  return QmodZ(k * (p2 - m2 - n + k * m2 * p2), 24 * n);
}

QmodZ t_pn(const Integer& n, const Integer& k) {
  if (n < 1) throw InvalidInput("t_pn: n must be at least 1");
  return QmodZ(k * (k - n), 24 * n);
}

QmodZ gwz_pn_discrepancy(const Integer& n, const Integer& k) {
  return t_gwz(GwzManifold::positively_curved(n), k) - t_pn(n, k);
}

QmodZ t_s7_from_ebar(const Integer& ebar) { return QmodZ(ebar * (ebar - 1), Integer(24)); }

QmodZ s_relation(const QmodZ& s_value, int k) {
  if (k < 2) throw InvalidInput("s_relation: k must be at least 2");
  return s_value * Integer(a_const(k));
}

}  // namespace tinv
