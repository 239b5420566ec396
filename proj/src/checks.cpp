#include "tinv/checks.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "tinv/charclass.hpp"
#include "tinv/closedforms.hpp"
#include "tinv/coboundary.hpp"
#include "tinv/exotic.hpp"
#include "tinv/homotopy.hpp"

namespace tinv {

namespace oracle {

std::optional<std::vector<std::size_t>> iso_by_bijection(const QuadraticLinkingFunction& q1,
                                                         const QuadraticLinkingFunction& q2) {
  const auto& g = q1.group();
  if (!(g == q2.group())) return std::nullopt;
  const std::size_t n = g.order();
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = q1(x) == q2(sigma[x]);
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = sigma[g.add(x, y)] == g.add(sigma[x], sigma[y]);
    if (ok) return sigma;
  } while (n > 1 && std::next_permutation(sigma.begin() + 1, sigma.end()));
  return std::nullopt;
}

}  // namespace oracle

namespace {

using Check = std::function<CheckReport()>;

const std::string kAllHold = "all hold";

std::string all_hold(std::size_t count) { return kAllHold + " (" + std::to_string(count) + " cases)"; }

// A property check: `body` returns the number of cases examined and throws
// Inconsistent with a description of the first failure.
CheckReport property(std::string name, const std::function<std::size_t()>& body) {
  std::size_t cases = 0;
  try {
    cases = body();
  } catch (const std::exception& e) {
    return {std::move(name), kAllHold, e.what()};
  }
  return {std::move(name), all_hold(cases), all_hold(cases)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Inconsistent(what);
}

// -- criteria ---------------------------------------------------------------

CheckReport ac01_oracle_grid() {
  return property("AC01 closed form = series oracle = tbar, 2<=k<=8, -50<=c<=50", [] {
    std::size_t cases = 0;
    for (int k = 2; k <= 8; ++k) {
      const RationalPolynomial tbar = tbar_poly(k);
      for (int c = -50; c <= 50; ++c, ++cases) {
        const QmodZ closed = t_pullback_closed(c, k);
        const QmodZ series = t_pullback_series(c, k);
        const QmodZ via_tbar = qz_normalize(Rational(a_const(k)) * tbar(Rational(c)));
        require(closed == series && series == via_tbar,
                "mismatch at c=" + std::to_string(c) + ", k=" + std::to_string(k) + ": closed " +
                    closed.str() + ", series " + series.str() + ", tbar " + via_tbar.str());
      }
    }
    return cases;
  });
}

CheckReport ac02_published_values() {
  const std::string computed = t_pullback_closed(2, 2).str() + ", " + t_pullback_closed(33, 3).str() +
                               ", " + t_pullback_closed(40, 4).str() + " / series " +
                               t_pullback_series(2, 2).str() + ", " + t_pullback_series(33, 3).str() +
                               ", " + t_pullback_series(40, 4).str();
  return {"AC02 t(2,2), t(33,3), t(40,4)", "1/12, 1/15, 5/28 / series 1/12, 1/15, 5/28", computed};
}

CheckReport ac03_congruences() {
  return property("AC03 congruence characterisations by residue scan (mod 24, mod 2520)", [] {
    for (int c = 0; c < 24; ++c) {
      const bool trivial = (c * (c - 1)) % 24 == 0;
      const bool congruence = (c % 8 == 0 || c % 8 == 1) && (c % 3 == 0 || c % 3 == 1);
      require(trivial == congruence, "mod 24 scan disagrees at c=" + std::to_string(c));
    }
    for (int c = 0; c < 2520; ++c) {
      const Integer cc = c;
      const bool extends_trivially =
          fg_admissible(cc, 2).admissible() && (2 * cc * (cc - 1) * (cc - 4)) % 720 == 0;
      const int m8 = c % 8, m9 = c % 9, m5 = c % 5;
      const bool congruence = (m8 == 0 || m8 == 1) && (m9 == 0 || m9 == 1 || m9 == 4 || m9 == 7) &&
                              (m5 == 0 || m5 == 1 || m5 == 4);
      require(extends_trivially == congruence, "mod 2520 scan disagrees at c=" + std::to_string(c));
    }
    return std::size_t{24 + 2520};
  });
}

CheckReport ac04_feder_gitler() {
  std::ostringstream computed;
  bool squares_ok = true;
  for (int m = 1; m * m <= 441; m += 2) squares_ok &= fg_admissible(m * m, 12).admissible();
  const bool zero_ok = fg_admissible(0, 12).admissible();
  const auto f2 = fg_admissible(2, 2);
  const auto f33 = fg_admissible(33, 3);
  computed << "c=0 " << (zero_ok ? "admissible" : "fails") << "; odd squares<=441 "
           << (squares_ok ? "admissible" : "fail") << "; (2,2) fails at j="
           << (f2.failing_j ? std::to_string(*f2.failing_j) : "none") << "; (33,3) fails at j="
           << (f33.failing_j ? std::to_string(*f33.failing_j) : "none");
  return {"AC04 Feder-Gitler admissibility",
          "c=0 admissible; odd squares<=441 admissible; (2,2) fails at j=2; (33,3) fails at j=3",
          computed.str()};
}

std::string image_summary(const std::set<QmodZ>& image, long modulus, long generator_order,
                          std::optional<QmodZ> named) {
  bool inside = true;
  bool generator = false;
  for (const auto& v : image) {
    inside &= v.divides_into(modulus);
    generator |= v.order() == generator_order;
  }
  std::string s = std::string(inside ? "inside" : "NOT inside") + " (1/" + std::to_string(modulus) +
                  ")Z/Z, generator " + (generator ? "attained" : "NOT attained");
  if (named) s += ", " + named->str() + (image.contains(*named) ? " attained" : " NOT attained");
  return s;
}

std::set<QmodZ> t_image(int k, int prior_k, int range) {
  std::set<QmodZ> image;
  for (int c = 0; c < range; ++c)
    if (fg_admissible(c, prior_k).admissible()) image.insert(t_pullback_closed(c, k));
  return image;
}

CheckReport ac05_image_orders() {
  const QmodZ fifteenth(Integer(1), Integer(15));
  const QmodZ five_28ths(Integer(5), Integer(28));
  const std::string computed = "k=3 over 0<=c<24: " + image_summary(t_image(3, 2, 24), 15, 15, fifteenth) +
                               "; k=4 over 0<=c<2520: " +
                               image_summary(t_image(4, 3, 2520), 28, 28, five_28ths);
  return {"AC05 image orders of t(.,3) and t(.,4) over admissible c",
          "k=3 over 0<=c<24: inside (1/15)Z/Z, generator attained, 1/15 attained; "
          "k=4 over 0<=c<2520: inside (1/28)Z/Z, generator attained, 5/28 attained",
          computed};
}

CheckReport note_k3_full_period() {
  const QmodZ fifteenth(Integer(1), Integer(15));
  return {"note: t(.,3) image over one full period 0<=c<360",
          "inside (1/15)Z/Z, generator attained, 1/15 attained",
          image_summary(t_image(3, 2, 360), 15, 15, fifteenth)};
}

Integer random_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

IntVector random_vector(std::mt19937_64& rng, Eigen::Index r, int bound) {
  IntVector v(r);
  for (Eigen::Index i = 0; i < r; ++i) v(i) = random_int(rng, -bound, bound);
  return v;
}

CoboundaryData random_coboundary(std::mt19937_64& rng, int max_rank, int bound) {
  for (;;) {
    const auto r = static_cast<Eigen::Index>(random_int(rng, 1, max_rank).convert_to<int>());
    IntMatrix lambda(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = i; j < r; ++j) lambda(i, j) = lambda(j, i) = random_int(rng, -bound, bound);
    IntVector p = random_vector(rng, r, bound);
    for (Eigen::Index i = 0; i < r; ++i)
      if ((lambda(i, i) - p(i)) % 2 != 0) p(i) += p(i) < bound ? 1 : -1;
    try {
      return {std::move(lambda), std::move(p)};
    } catch (const InvalidInput&) {
      // singular draw
    }
  }
}

CheckReport ac06_quadratic_laws() {
  return property("AC06 quadratic-form laws on 200 random coboundaries (r<=4, |entries|<=9)", [] {
    std::mt19937_64 rng(20240607);
    std::size_t cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const CoboundaryData cb = random_coboundary(rng, 4, 9);
      const Eigen::Index r = cb.rank();
      for (int draw = 0; draw < 5; ++draw, ++cases) {
        const IntVector x = random_vector(rng, r, 9);
        const IntVector y = random_vector(rng, r, 9);
        const IntVector z = random_vector(rng, r, 9);
        const auto qx = q_t_from_coboundary(cb, x);
        const std::string where = " (trial " + std::to_string(trial) + ")";
        require(qx.q == qx.t * 12, "q != 12 t" + where);
        const IntVector shifted = x + cb.lambda() * z;
        require(q_t_from_coboundary(cb, shifted).q == qx.q, "q(x + lambda z) != q(x)" + where);
        const IntVector sum = x + y;
        require(q_t_from_coboundary(cb, sum).q - qx.q - q_t_from_coboundary(cb, y).q == linking(cb, x, y),
                "polarisation differs from linking" + where);
        const IntVector neg = -x;
        require(qx.q - q_t_from_coboundary(cb, neg).q == linking(cb, cb.p(), x),
                "homogeneity defect differs from b(p, x)" + where);
      }
    }
    return cases;
  });
}

CheckReport ac07_ahat() {
  return property("AC07 A-hat normalisation, cosh polynomial leading terms and tbar(n^2)", [] {
    std::size_t cases = 0;
    for (int k = 1; k <= 8; ++k, ++cases) {
      const auto a = ahat_hpk(k);
      require(a.series[0] == 1, "constant term of Ahat(HP^" + std::to_string(k) + ") is not 1");
      require(a.series[1] == -Rational(2 * k - 2, 24), "degree-1 coefficient wrong for k=" + std::to_string(k));
      require(a.series[static_cast<std::size_t>(k)] == 0, "Ahat-genus of HP^" + std::to_string(k) + " nonzero");
    }
    for (int n = 1; n <= 8; ++n, ++cases) {
      const auto p = cosh_poly_coeffs(n);
      require(p.back() == Rational(Integer(1) << (2 * n - 1)), "p_{n,n} != 2^{2n-1} for n=" + std::to_string(n));
      for (const auto& v : p) require(boost::multiprecision::denominator(v) == 1, "non-integral p_{n,m}");
    }
    for (int n = 1; n <= 6; ++n) {
      const auto p = cosh_poly_coeffs(n);
      for (int k = 1; k <= n; ++k, ++cases) {
        const Rational lhs = Rational(Integer(1) << (2 * k)) * tbar_poly(k)(Rational(n * n));
        require(lhs == p[static_cast<std::size_t>(k)],
                "2^{2k} tbar_k(n^2) != p_{n,k} at n=" + std::to_string(n) + ", k=" + std::to_string(k));
      }
    }
    return cases;
  });
}

std::vector<QuadraticLinkingFunction> small_qlf_family() {
  std::vector<CoboundaryData> data;
  for (int n = 1; n <= 8; ++n)
    for (int p = -n; p <= n + 1; ++p)
      if ((n - p) % 2 == 0) data.push_back(CoboundaryData::rank_one(n, p));
  auto add = [&](IntMatrix l, std::initializer_list<std::initializer_list<long>> ps) {
    for (const auto& p : ps) data.emplace_back(l, make_int_vector(p));
  };
  add(make_int_matrix({{2, 0}, {0, 2}}), {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {-2, 2}});
  add(make_int_matrix({{0, 2}, {2, 0}}), {{0, 0}, {2, 0}, {0, 2}});
  add(make_int_matrix({{2, 0}, {0, 4}}), {{0, 0}, {2, 0}, {0, 2}, {2, 4}});
  add(make_int_matrix({{-2, 0}, {0, 4}}), {{0, 0}, {2, 2}});
  add(make_int_matrix({{2, 1}, {1, 2}}), {{0, 0}, {2, 0}});
  add(make_int_matrix({{2, 1}, {1, 4}}), {{0, 0}, {2, 2}});
  add(make_int_matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), {{0, 0, 0}, {2, 0, 0}, {2, 2, 2}});
  add(make_int_matrix({{1, 0}, {0, 5}}), {{1, 1}, {1, 5}});
  std::vector<QuadraticLinkingFunction> out;
  for (const auto& cb : data) out.push_back(qlf_from_coboundary(cb));
  return out;
}

CheckReport ac08_classification() {
  return property("AC08 classification: P_n ~ M_{n,n}, M_{2,2} vs M_{2,4}, classify_pair, brute force", [] {
    std::size_t cases = 0;
    for (std::int64_t n = 1; n <= 50; ++n, ++cases)
      require(iso_qlf(qlf_pn(n), qlf_from_coboundary(CoboundaryData::rank_one(n, n))).has_value(),
              "q_{P_n} not isomorphic to q_{M_{n,n}} at n=" + std::to_string(n));
    const auto m22 = qlf_from_coboundary(CoboundaryData::rank_one(2, 2));
    const auto m24 = qlf_from_coboundary(CoboundaryData::rank_one(2, 4));
    require(!iso_qlf(m22, m24).has_value(), "q_{M_{2,2}} isomorphic to q_{M_{2,4}}");
    ++cases;

    const auto m33 = qlf_from_coboundary(CoboundaryData::rank_one(3, 3));
    const QmodZ mu0 = mu_hat(CoboundaryData::rank_one(3, 3));
    const QmodZ sigma(Integer(1), Integer(28));
    const auto same = classify_pair(m33, qlf_pn(3), mu0, mu0);
    require(same.kind == PairVerdictKind::diffeomorphic, "equal mu did not give diffeomorphic");
    const auto exotic = classify_pair(m33, m33, mu0, mu0 + sigma);
    require(exotic.kind == PairVerdictKind::almost_diffeomorphic_only && exotic.mu_difference == sigma &&
                exotic.discrepancy_is_exotic_sphere,
            "mu differing by 1/28 did not give almost_diffeomorphic_only with discrepancy 1/28");
    require(classify_pair(m22, m24, mu0, mu0).kind == PairVerdictKind::distinct,
            "M_{2,2}, M_{2,4} not distinct");
    cases += 3;

    const auto family = small_qlf_family();
    for (const auto& a : family)
      for (const auto& b : family) {
        if (!(a.group() == b.group())) continue;
        const auto fast = iso_qlf(a, b);
        const auto brute = oracle::iso_by_bijection(a, b);
        require(fast.has_value() == brute.has_value(), "iso_qlf disagrees with the bijection search");
        if (fast)
          for (std::size_t x = 0; x < a.group().order(); ++x)
            require(a(x) == b(fast->apply(a.group(), x)), "iso_qlf witness does not intertwine q");
        ++cases;
      }
    return cases;
  });
}

CheckReport ac09_exotic() {
  return property("AC09 exotic detection for even |n|<=20, all valid |p|<=20", [] {
    std::size_t cases = 0;
    for (int n = -20; n <= 20; n += 2) {
      if (n == 0) continue;
      for (int p = -20; p <= 20; p += 2, ++cases) {
        const TTable tab = TTable::untwisted(SphereBundle7(n, p));
        const std::string where = " at (n,p)=(" + std::to_string(n) + "," + std::to_string(p) + ")";
        require(detect_ks(tab, pinch_twisted_table(tab)) == KsBit::one, "twist not detected" + where);
        require(detect_ks(tab, tab) == KsBit::zero, "identity reported exotic" + where);
        TTable corrupted = tab;
        corrupted.set(0, 3, tab.at(0, 3) + QmodZ(Integer(1), Integer(3)));
        require(detect_ks(tab, corrupted) == KsBit::inconsistent, "1/3 corruption not flagged" + where);
      }
    }
    return cases;
  });
}

CheckReport ac10_stabilisation() {
  return property("AC10 stabilisation loop for -100<=c<=100", [] {
    std::size_t cases = 0;
    for (int c = -100; c <= 100; ++c, ++cases) {
      const int e = stabilize_pi7s4(fc_hopf(c));
      require(((e - c) % 24 + 24) % 24 == 0, "S[F_c o H] != c mod 24 at c=" + std::to_string(c));
      require(t_s7_from_ebar(e) == t_pullback_closed(c, 2), "t_S7(ebar) != t(c,2) at c=" + std::to_string(c));
    }
    return cases;
  });
}

CheckReport ac11_bundle_model() {
  return property("AC11 Bun(M_{n,p}) = 12|H^4| classes, injective (c2,t), lift independence, |n|<=20", [] {
    std::size_t cases = 0;
    for (int n = -20; n <= 20; ++n) {
      if (n == 0) continue;
      for (int p = -20; p <= 20; ++p) {
        if ((n - p) % 2 != 0) continue;
        const std::string where = " at (n,p)=(" + std::to_string(n) + "," + std::to_string(p) + ")";
        const auto q = qlf_from_coboundary(CoboundaryData::rank_one(n, p));
        const auto classes = bun_enumerate(q);
        require(classes.size() == 12 * static_cast<std::size_t>(std::abs(n)), "wrong class count" + where);
        const std::set<BundleClass> distinct(classes.begin(), classes.end());
        require(distinct.size() == classes.size(), "(c2, t) not injective" + where);
        for (const auto& e : classes) require(e.t * 12 == q(e.c2), "12 t != q(c2)" + where);
        const SphereBundle7 m(n, p);
        for (int k = -20; k <= 20; ++k) {
          const QmodZ shift = sphere_bundle_invariants(m, k + n).t - sphere_bundle_invariants(m, k).t;
          require(shift == QmodZ(Integer(p + 2 * k + n), Integer(24)) && shift.divides_into(12),
                  "lift dependence not in (1/12)Z/Z" + where);
        }
        ++cases;
      }
    }
    return cases;
  });
}

CheckReport ac12_gwz_discrepancy() {
  return property("AC12 t_gwz(P_n) - t_pn = k(k+1)(n-1)/6 mod 1, surfaced", [] {
    std::size_t cases = 0;
    for (int n = 1; n <= 20; ++n)
      for (int k = -20; k <= 20; ++k, ++cases) {
        const QmodZ diff = gwz_pn_discrepancy(n, k);
        const Integer num = Integer(k) * (k + 1) * (n - 1);
        require(diff == QmodZ(num, Integer(6)), "discrepancy formula fails at n=" + std::to_string(n) +
                                                    ", k=" + std::to_string(k));
        require(diff.is_zero() == (num % 6 == 0), "zero test fails");
      }
    require(!gwz_pn_discrepancy(3, 1).is_zero(), "discrepancy at (n,k)=(3,1) unexpectedly vanishes");
    return cases;
  });
}

// -- individual published examples ------------------------------------------

std::vector<Check> example_checks() {
  return {
      [] { return CheckReport("t on S^7, c=2", "1/12", t_pullback_closed(2, 2).str()); },
      [] { return CheckReport("t on S^11, c=33", "1/15", t_pullback_closed(33, 3).str()); },
      [] { return CheckReport("t on S^15, c=40", "5/28", t_pullback_closed(40, 4).str()); },
      [] {
        return CheckReport("trivial bundle", "0",
                           sphere_bundle_invariants(SphereBundle7(1, 1), 0).t.str());
      },
      [] {
        return CheckReport("sphere bundle q on M_{2,2} at k=1", "3/4",
                           sphere_bundle_invariants(SphereBundle7(2, 2), 1).q.str());
      },
      [] {
        return CheckReport("sphere bundle t on M_{1,1} at k=-2", "1/12",
                           sphere_bundle_invariants(SphereBundle7(1, 1), -2).t.str());
      },
      [] { return CheckReport("GWZ M_{(1,1),(5,7)} t at k=1", "23/36", t_gwz(GwzManifold(1, 1, 5, 7), 1).str()); },
      [] { return CheckReport("t on P_3 at k=1", "35/36", t_pn(3, 1).str()); },
      [] {
        return CheckReport("E8 Eells-Kuiper defect", "1/28", mu_hat(CoboundaryData::e8()).str());
      },
      [] {
        const TTable tab = TTable::untwisted(SphereBundle7(2, 2));
        const auto bit = detect_ks(tab, pinch_twisted_table(tab));
        return CheckReport("pinch-twist detection on M_{2,2}", "KS=1",
                           bit == KsBit::one ? "KS=1" : bit == KsBit::zero ? "KS=0" : "inconsistent");
      },
      [] {
        return property("oracle k=5 grid", [] {
          for (int c = -50; c <= 50; ++c)
            require(t_pullback_series(c, 5) == t_pullback_closed(c, 5), "mismatch at c=" + std::to_string(c));
          return std::size_t{101};
        });
      },
      [] {
        const std::string computed = std::to_string(stabilize_s15({1, 0, 0})) + ", " +
                                     std::to_string(stabilize_s15({14, 0, 0})) + ", " +
                                     std::to_string(stabilize_s15({0, 1, 1}));
        return CheckReport("pi_14(S^3) stabilisation (x36, 0, 0)", "36, 0, 0", computed);
      },
      note_k3_full_period,
  };
}

std::vector<Check> criteria() {
  return {ac01_oracle_grid, ac02_published_values, ac03_congruences, ac04_feder_gitler,
          ac05_image_orders, ac06_quadratic_laws, ac07_ahat, ac08_classification,
          ac09_exotic, ac10_stabilisation, ac11_bundle_model, ac12_gwz_discrepancy};
}

std::vector<CheckReport> run_all(const std::vector<Check>& checks) {
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(checks.size());
  for (const auto& check : checks)
    pending.push_back(std::async(std::launch::async, [check] {
      try {
        return check();
      } catch (const std::exception& e) {
        return CheckReport("(check threw)", "no exception", e.what());
      }
    }));
  std::vector<CheckReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace

std::vector<CheckReport> run_acceptance_criteria() { return run_all(criteria()); }

std::vector<CheckReport> run_paper_checks() {
  auto checks = criteria();
  const auto examples = example_checks();
  checks.insert(checks.end(), examples.begin(), examples.end());
  return run_all(checks);
}

}  // namespace tinv
