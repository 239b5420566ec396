#pragma once

// Bookkeeping for the homotopy groups of spheres that carry the bundle sets
// Bun(S^7) = pi_6(S^3), Bun(S^11) = pi_10(S^3) and Bun(S^15) = pi_14(S^3).

#include "tinv/exact.hpp"

namespace tinv {

/// Element a [H] + [b] of pi_7(S^4) = Z[H] + S pi_6(S^3), S pi_6(S^3) = Z/12.
struct Pi7S4Element {
  Integer hopf_mult;
  int torsion;  // in 0..11

  Pi7S4Element(Integer hopf, const Integer& torsion_rep);
  friend bool operator==(const Pi7S4Element&, const Pi7S4Element&) = default;
};

/// Stabilisation pi_7(S^4) -> pi_3^S = Z/24, (a, [b]) -> [a - 2b].
int stabilize_pi7s4(const Pi7S4Element& e);

/// [F_c o H] = (c^2, [c(c-1)/2]) for F_c a self-map of S^4 of degree c.
Pi7S4Element fc_hopf(const Integer& c);

/// Element of pi_14(S^3) = Z/84 + Z/2 + Z/2.
struct BunS15Element {
  int x;  // mod 84
  int y;  // mod 2
  int z;  // mod 2

  BunS15Element(long x_rep, long y_rep, long z_rep);
  friend bool operator==(const BunS15Element&, const BunS15Element&) = default;
};

/// Stabilisation pi_14(S^3) -> pi_11^S = Z/504, (x, y, z) -> 36 x.
int stabilize_s15(const BunS15Element& e);

}  // namespace tinv
