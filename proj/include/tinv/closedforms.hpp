#pragma once

// Closed-form t-invariants and related secondary invariants of 7-manifolds
// and of pulled-back bundles over spheres.

#include <optional>

#include "tinv/exact.hpp"

namespace tinv {

/// a_k/(2k)! prod_{j<k} (c - j^2) mod 1: the t-invariant of p_k^* E_c on
/// S^{4k-1}. Requires k >= 2.
QmodZ t_pullback_closed(const Integer& c, int k);

struct FgVerdict {
  /// Least j in 2..k whose Feder-Gitler quantity is not integral.
  std::optional<int> failing_j;
  bool admissible() const { return !failing_j.has_value(); }
};

/// Checks a_j/(2j)! prod_{i<j} (c - i^2) in Z for every 2 <= j <= k.
FgVerdict fg_admissible(const Integer& c, int k);

/// Total space M_{n,p} of the 3-sphere bundle over S^4 whose disc bundle has
/// Euler number n and spin class p_W = p (in units of the generator).
class SphereBundle7 {
 public:
  /// Throws InvalidInput unless n != 0 and p = n mod 2.
  SphereBundle7(Integer n, Integer p);

  const Integer& n() const { return n_; }
  const Integer& p() const { return p_; }
  /// |H^4(M)| = |n|.
  Integer order() const { return abs(n_); }

 private:
  Integer n_;
  Integer p_;
};

struct SphereBundleInvariants {
  QmodZ t;     // t_M(i^* E_k)
  QmodZ q;     // q_M([k])
  QmodZ b_kk;  // b_M([k], [k])
  QmodZ mu;    // Eells-Kuiper defect of the disc bundle
};

SphereBundleInvariants sphere_bundle_invariants(const SphereBundle7& m, const Integer& k);

/// Grove-Wilking-Ziller manifold M_{(p_-,q_-),(p_+,q_+)}.
class GwzManifold {
 public:
  /// Throws InvalidInput unless all entries are positive and odd, each pair
  /// is coprime and the derived order n is nonzero.
  GwzManifold(Integer p_minus, Integer q_minus, Integer p_plus, Integer q_plus);

  /// P_n = M_{(1,1),(2n-1,2n+1)}.
  static GwzManifold positively_curved(const Integer& n);

  const Integer& p_minus() const { return p_minus_; }
  const Integer& q_minus() const { return q_minus_; }
  const Integer& p_plus() const { return p_plus_; }
  const Integer& q_plus() const { return q_plus_; }
  /// |p_-^2 q_+^2 - p_+^2 q_-^2| / 8 = |H^4(M)|.
  const Integer& n() const { return n_; }

 private:
  Integer p_minus_, q_minus_, p_plus_, q_plus_;
  Integer n_;
};

enum class SeifertFibration { first, second };

/// t_M(pi^* E) for c2(E)[S^4] = k. The second fibration swaps the roles of
/// p and q.
QmodZ t_gwz(const GwzManifold& m, const Integer& k,
            SeifertFibration fibration = SeifertFibration::first);

/// k(k-n)/(24n) mod 1. Requires n >= 1.
QmodZ t_pn(const Integer& n, const Integer& k);

/// t_gwz(P_n, k) - t_pn(n, k). The two published formulas disagree by
/// k(k+1)(n-1)/6 mod 1; this reports the difference as computed.
QmodZ gwz_pn_discrepancy(const Integer& n, const Integer& k);

/// ebar(ebar - 1)/24 mod 1 for an integer representative of ebar in Z/24.
QmodZ t_s7_from_ebar(const Integer& ebar);

/// t-invariant of L + L^* from s_M: a_k s. Requires k >= 2.
QmodZ s_relation(const QmodZ& s_value, int k);

}  // namespace tinv
