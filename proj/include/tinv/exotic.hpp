#pragma once

// Detection of exotic (non-PL) homeomorphisms of sphere bundles M_{n,p}
// from tables of t-invariants of pulled-back quaternionic line bundles.

#include <cstddef>
#include <span>
#include <vector>

#include "tinv/closedforms.hpp"
#include "tinv/exact.hpp"

namespace tinv {

/// t-invariants of all bundles over M_{n,p}, n even, indexed by the class
/// (c2 in Z/|n|, s in Z/12).
class TTable {
 public:
  /// Throws InvalidInput if n is odd, the entry count is not 12|n|, or an
  /// entry has denominator not dividing 24|n|.
  TTable(SphereBundle7 manifold, std::vector<QmodZ> entries);

  /// Entry (c2, s) = c2 (p + c2) / (24 n) + s/12.
  static TTable untwisted(const SphereBundle7& manifold);

  const SphereBundle7& manifold() const { return manifold_; }
  std::size_t order() const { return entries_.size() / 12; }
  std::span<const QmodZ> entries() const { return entries_; }
  const QmodZ& at(std::size_t c2, int s) const { return entries_.at(12 * c2 + static_cast<std::size_t>(s)); }
  void set(std::size_t c2, int s, QmodZ value);

  friend bool operator==(const TTable& a, const TTable& b) { return a.entries_ == b.entries_; }

 private:
  SphereBundle7 manifold_;
  std::vector<QmodZ> entries_;
};

/// Pulls every bundle back along the pinch map that twists by 6 in
/// pi_7(BS^3) = Z/12 on odd classes: entries with odd c2 shift by 1/2.
TTable pinch_twisted_table(const TTable& table);

enum class KsBit { zero, one, inconsistent };

/// Recovers the Kirby-Siebenmann bit kappa from
/// delta(E) = t_N(h^* E) - t_M(E) = kappa (c2(E) mod 2) / 2.
/// Throws InvalidInput if the tables belong to different manifolds.
KsBit detect_ks(const TTable& table_m, const TTable& table_n_pulled);

}  // namespace tinv
