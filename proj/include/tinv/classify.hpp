#pragma once

// Quadratic linking functions on finite abelian groups and the decision
// procedures for (almost) diffeomorphism of 2-connected rational homology
// 7-spheres, together with the bundle set Bun(M) = H^4(M) x Z/12.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tinv/coboundary.hpp"
#include "tinv/exact.hpp"

namespace tinv {

/// Z/d_1 + ... + Z/d_r with d_1 | d_2 | ... and every d_i >= 2. Elements are
/// addressed by a dense index in [0, order): index = sum_i c_i * stride_i
/// with stride_0 = 1, so in a cyclic group the index is the residue.
class FiniteAbelian {
 public:
  static constexpr std::int64_t default_bound = 10000;

  /// Throws InvalidInput if a factor is < 2, the divisibility chain fails,
  /// or the order exceeds `bound`.
  explicit FiniteAbelian(std::vector<std::int64_t> invariant_factors = {},
                         std::int64_t bound = default_bound);
  /// Factors equal to 1 are dropped.
  static FiniteAbelian from_factors(const std::vector<Integer>& factors,
                                    std::int64_t bound = default_bound);
  static FiniteAbelian cyclic(std::int64_t n, std::int64_t bound = default_bound);

  std::span<const std::int64_t> invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }

  std::vector<std::int64_t> coordinates(std::size_t index) const;
  /// Reduces each coordinate into [0, d_i).
  std::size_t index(std::span<const std::int64_t> coords) const;
  std::size_t generator(std::size_t i) const { return strides_.at(i); }

  std::size_t add(std::size_t x, std::size_t y) const;
  std::size_t negate(std::size_t x) const;
  std::size_t scale(std::size_t x, std::int64_t m) const;
  std::int64_t element_order(std::size_t x) const;

  friend bool operator==(const FiniteAbelian& a, const FiniteAbelian& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
};

/// Automorphism of a FiniteAbelian, determined by the images of the
/// standard generators.
struct Automorphism {
  std::vector<std::size_t> generator_images;

  std::size_t apply(const FiniteAbelian& g, std::size_t x) const;
  /// Image of every element, indexed by element.
  std::vector<std::size_t> table(const FiniteAbelian& g) const;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

/// Enumerates Aut(G) exactly once each: generator images range over
/// elements of matching order (odometer order, first generator fastest) and
/// candidates that fail to be injective are skipped.
class AutomorphismEnumerator {
 public:
  explicit AutomorphismEnumerator(FiniteAbelian group);
  std::optional<Automorphism> next();

 private:
  FiniteAbelian group_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> cursor_;
  bool exhausted_ = false;
};

std::vector<Automorphism> aut_enumerate(const FiniteAbelian& g);

/// q: G -> Q/Z tabulated by element index. `base_t` holds a chosen
/// t-invariant over each class with 12 t = q.
class QuadraticLinkingFunction {
 public:
  /// When `base_t` is empty, base_t(x) = rep(q(x))/12.
  QuadraticLinkingFunction(FiniteAbelian group, std::vector<QmodZ> values,
                           std::vector<QmodZ> base_t = {});

  const FiniteAbelian& group() const { return group_; }
  std::span<const QmodZ> values() const { return values_; }
  const QmodZ& operator()(std::size_t x) const { return values_.at(x); }
  const QmodZ& base_t(std::size_t x) const { return base_t_.at(x); }

  /// b(x, y) = q(x + y) - q(x) - q(y).
  QmodZ linking(std::size_t x, std::size_t y) const;

  /// kappa with q(x) - q(-x) = b(kappa, x) for all x, if one exists.
  std::optional<std::size_t> homogeneity_class() const;

  /// Checks q(0) = 0, bilinearity and nondegeneracy of b, existence of
  /// kappa, and 12 base_t = q. Throws Inconsistent naming the failure.
  void validate() const;

 private:
  FiniteAbelian group_;
  std::vector<QmodZ> values_;
  std::vector<QmodZ> base_t_;
};

/// Tabulates q and t on coker(lambda) at canonical lifts, then validates.
/// Throws InvalidInput if |coker| exceeds `bound`.
QuadraticLinkingFunction qlf_from_coboundary(const CoboundaryData& cb,
                                             std::int64_t bound = FiniteAbelian::default_bound);

/// q = 12 t for a table of t-invariants over the classes of `group`.
QuadraticLinkingFunction qlf_from_t_table(FiniteAbelian group, std::vector<QmodZ> t);

/// The P_n model: H^4 = Z/n with t([k]) = k(k-n)/(24n).
QuadraticLinkingFunction qlf_pn(std::int64_t n);

/// A with q1 = q2 o A, first in enumeration order; none when the groups or
/// the forms are not isomorphic.
std::optional<Automorphism> iso_qlf(const QuadraticLinkingFunction& q1,
                                    const QuadraticLinkingFunction& q2);

enum class PairVerdictKind { diffeomorphic, almost_diffeomorphic_only, distinct };

struct PairVerdict {
  PairVerdictKind kind;
  std::optional<Automorphism> witness;
  /// mu_N - mu_M when the manifolds are almost diffeomorphic.
  std::optional<QmodZ> mu_difference;
  /// True when mu_difference lies in (1/28)Z/Z, i.e. is realised by a
  /// homotopy sphere.
  bool discrepancy_is_exotic_sphere = false;
};

PairVerdict classify_pair(const QuadraticLinkingFunction& m, const QuadraticLinkingFunction& n,
                          const QmodZ& mu_m, const QmodZ& mu_n);

std::string_view to_string(PairVerdictKind kind);

struct BundleClass {
  std::size_t c2;
  QmodZ t;
  friend auto operator<=>(const BundleClass&, const BundleClass&) = default;
};

/// All 12 |G| classes (c, base_t(c) + s/12), ordered by c then s.
std::vector<BundleClass> bun_enumerate(const QuadraticLinkingFunction& q);

struct TIsomorphism {
  Automorphism a;
  /// (E, B(E)) for every E in Bun(M); B(c, t) = (A c, t).
  std::vector<std::pair<BundleClass, BundleClass>> bundle_map;
};

/// Compatible pair (A, B) between the t-invariants of M and N; exists iff
/// iso_qlf succeeds. Throws Inconsistent if an induced image is missing
/// from Bun(N).
std::optional<TIsomorphism> t_iso(const QuadraticLinkingFunction& m,
                                  const QuadraticLinkingFunction& n);

/// "sphere-bundle:n,p" or "file:<path to coboundary JSON>".
CoboundaryData parse_manifold_spec(std::string_view spec);

}  // namespace tinv
