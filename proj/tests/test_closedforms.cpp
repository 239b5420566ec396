#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tinv/closedforms.hpp"
#include "tinv/errors.hpp"

using namespace tinv;

namespace {
QmodZ qz(long num, long den) { return QmodZ(Integer(num), Integer(den)); }
}  // namespace

TEST_CASE("t_pullback_closed examples") {
  CHECK(t_pullback_closed(40, 4) == qz(5, 28));
  CHECK(t_pullback_closed(33, 3) == qz(1, 15));
  CHECK(t_pullback_closed(1, 6).is_zero());
  CHECK(t_pullback_closed(2, 2) == qz(1, 12));
  CHECK_THROWS_AS(t_pullback_closed(2, 1), InvalidInput);
}

TEST_CASE("t on S^7 is c(c-1)/24") {
  for (int c = -30; c <= 30; ++c) CHECK(t_pullback_closed(c, 2) == qz(c * (c - 1), 24));
}

TEST_CASE("fg_admissible examples") {
  CHECK(fg_admissible(2, 2).failing_j == 2);
  CHECK(fg_admissible(33, 3).failing_j == 3);
  CHECK(fg_admissible(9, 10).admissible());
  CHECK(fg_admissible(0, 12).admissible());
  for (int m = 1; m <= 21; m += 2) CHECK(fg_admissible(m * m, 12).admissible());
  CHECK(fg_admissible(5, 1).admissible());  // no conditions below j = 2
}

TEST_CASE("admissibility up to k makes every lower t-invariant vanish") {
  for (int c = -60; c <= 60; ++c) {
    const auto v = fg_admissible(c, 6);
    const int last_ok = v.failing_j ? *v.failing_j - 1 : 6;
    for (int j = 2; j <= last_ok; ++j) CHECK(t_pullback_closed(c, j).is_zero());
    if (v.failing_j) CHECK_FALSE(t_pullback_closed(c, *v.failing_j).is_zero());
  }
}

TEST_CASE("sphere bundle validation") {
  CHECK_THROWS_AS(SphereBundle7(0, 0), InvalidInput);
  CHECK_THROWS_AS(SphereBundle7(1, 2), InvalidInput);
  CHECK_NOTHROW(SphereBundle7(-3, 5));
}

TEST_CASE("sphere_bundle_invariants examples") {
  CHECK(sphere_bundle_invariants(SphereBundle7(1, 1), -2).t == qz(1, 12));
  CHECK(sphere_bundle_invariants(SphereBundle7(2, 2), 1).q == qz(3, 4));
  const auto trivial = sphere_bundle_invariants(SphereBundle7(1, 1), 0);
  CHECK(trivial.t.is_zero());
  CHECK(trivial.q.is_zero());
  CHECK(sphere_bundle_invariants(SphereBundle7(5, 1), 2).b_kk == qz(4, 5));
  // mu = (sign n - p^2/n)/224: (1 - 9)/224 for (1, 3)
  CHECK(sphere_bundle_invariants(SphereBundle7(1, 3), 0).mu == qz(27, 28));
  CHECK(sphere_bundle_invariants(SphereBundle7(1, 1), 0).mu.is_zero());
}

TEST_CASE("sphere bundle laws on a grid") {
  for (int n = -12; n <= 12; ++n) {
    if (n == 0) continue;
    for (int p = -12; p <= 12; ++p) {
      if ((n - p) % 2) continue;
      const SphereBundle7 m(n, p);
      for (int k = -12; k <= 12; ++k) {
        const auto inv = sphere_bundle_invariants(m, k);
        CHECK(inv.q == inv.t * 12);
        CHECK(sphere_bundle_invariants(m, k + n).q == inv.q);
        CHECK(sphere_bundle_invariants(m, -k).q == inv.q - qz(k * p, n));  // homogeneity defect
        for (int l = -3; l <= 3; ++l) {
          const QmodZ polar = sphere_bundle_invariants(m, k + l).q - inv.q - sphere_bundle_invariants(m, l).q;
          CHECK(polar == qz(k * l, n));
        }
        const QmodZ shift = sphere_bundle_invariants(m, k + n).t - inv.t;
        CHECK(shift == qz(p + 2 * k + n, 24));
        CHECK(shift.divides_into(12));
      }
    }
  }
}

TEST_CASE("GWZ manifold validation") {
  CHECK_THROWS_AS(GwzManifold(1, 1, 2, 3), InvalidInput);   // even entry
  CHECK_THROWS_AS(GwzManifold(3, 3, 1, 1), InvalidInput);   // not coprime
  CHECK_THROWS_AS(GwzManifold(1, 1, 1, 1), InvalidInput);   // n = 0
  CHECK_THROWS_AS(GwzManifold(-1, 1, 1, 3), InvalidInput);  // negative
  CHECK(GwzManifold(1, 1, 5, 7).n() == 3);
  CHECK(GwzManifold::positively_curved(4).n() == 4);
}

TEST_CASE("t_gwz examples") {
  const GwzManifold p1(1, 1, 1, 3);
  CHECK(p1.n() == 1);
  CHECK(t_gwz(p1, 1).is_zero());
  for (int k = -10; k <= 10; ++k) {
    CHECK(t_gwz(p1, k) == qz(k * (k - 1), 24));
    CHECK(t_gwz(p1, k) == t_pn(1, k));
  }
  // n = |49 - 25|/8 = 3, t = (25 - 1 - 3 + 25)/72
  CHECK(t_gwz(GwzManifold(1, 1, 5, 7), 1) == qz(23, 36));
  // second fibration: (q+^2 - q-^2 - n + k q-^2 q+^2) = 49 - 1 - 3 + 49
  CHECK(t_gwz(GwzManifold(1, 1, 5, 7), 1, SeifertFibration::second) == qz(94, 72));
}

TEST_CASE("t_pn examples") {
  CHECK(t_pn(1, 2) == qz(1, 12));
  CHECK(t_pn(3, 3).is_zero());
  CHECK(t_pn(3, 1) == qz(35, 36));
  CHECK_THROWS_AS(t_pn(0, 1), InvalidInput);
}

TEST_CASE("GWZ and P_n formulas differ by k(k+1)(n-1)/6") {
  CHECK(gwz_pn_discrepancy(3, 1) == qz(2, 3));
  for (int n = 1; n <= 15; ++n)
    for (int k = -15; k <= 15; ++k) CHECK(gwz_pn_discrepancy(n, k) == qz(k * (k + 1) * (n - 1), 6));
}

TEST_CASE("t_s7_from_ebar examples") {
  CHECK(t_s7_from_ebar(2) == qz(1, 12));
  CHECK(t_s7_from_ebar(0).is_zero());
  CHECK(t_s7_from_ebar(26) == t_s7_from_ebar(2));
}

TEST_CASE("s_relation examples") {
  CHECK(s_relation(qz(1, 7), 2) == qz(1, 7));
  CHECK(s_relation(qz(1, 7), 3) == qz(2, 7));
  CHECK(s_relation(QmodZ(), 5).is_zero());
  CHECK_THROWS_AS(s_relation(qz(1, 7), 1), InvalidInput);
}
