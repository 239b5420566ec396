#include "tinv/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tinv/closedforms.hpp"

namespace tinv {

// ---------------------------------------------------------------------------
// FiniteAbelian

FiniteAbelian::FiniteAbelian(std::vector<std::int64_t> invariant_factors, std::int64_t bound)
    : factors_(std::move(invariant_factors)) {
  std::int64_t order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t d = factors_[i];
    if (d < 2) throw InvalidInput("invariant factors must be at least 2");
    if (i > 0 && d % factors_[i - 1] != 0)
      throw InvalidInput("invariant factors must form a divisibility chain");
    if (order > bound / d)
      throw InvalidInput("group order exceeds the bound " + std::to_string(bound));
    strides_.push_back(static_cast<std::size_t>(order));
    order *= d;
  }
  if (order > bound) throw InvalidInput("group order exceeds the bound " + std::to_string(bound));
  order_ = static_cast<std::size_t>(order);
}

FiniteAbelian FiniteAbelian::from_factors(const std::vector<Integer>& factors, std::int64_t bound) {
  std::vector<std::int64_t> d;
  for (const auto& f : factors) {
    if (f == 1) continue;
    if (f > bound) throw InvalidInput("group order exceeds the bound " + std::to_string(bound));
    d.push_back(to_int64(f));
  }
  return FiniteAbelian(std::move(d), bound);
}

FiniteAbelian FiniteAbelian::cyclic(std::int64_t n, std::int64_t bound) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  return n == 1 ? FiniteAbelian({}, bound) : FiniteAbelian({n}, bound);
}

std::vector<std::int64_t> FiniteAbelian::coordinates(std::size_t index) const {
  std::vector<std::int64_t> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    c[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return c;
}

std::size_t FiniteAbelian::index(std::span<const std::int64_t> coords) const {
  if (coords.size() != factors_.size()) throw InvalidInput("coordinate vector has the wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t c = coords[i] % factors_[i];
    if (c < 0) c += factors_[i];
    idx += static_cast<std::size_t>(c) * strides_[i];
  }
  return idx;
}

std::size_t FiniteAbelian::add(std::size_t x, std::size_t y) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    idx += ((x % d + y % d) % d) * strides_[i];
    x /= d;
    y /= d;
  }
  return idx;
}

std::size_t FiniteAbelian::negate(std::size_t x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    idx += ((d - x % d) % d) * strides_[i];
    x /= d;
  }
  return idx;
}

std::size_t FiniteAbelian::scale(std::size_t x, std::int64_t m) const {
  auto c = coordinates(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    // coordinates and factors are bounded by the order, so this cannot overflow
    c[i] = (c[i] * (m % factors_[i])) % factors_[i];
  }
  return index(c);
}

std::int64_t FiniteAbelian::element_order(std::size_t x) const {
  std::int64_t ord = 1;
  const auto c = coordinates(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t d = factors_[i];
    ord = std::lcm(ord, d / std::gcd(d, c[i]));
  }
  return ord;
}

// ---------------------------------------------------------------------------
// Automorphisms

std::size_t Automorphism::apply(const FiniteAbelian& g, std::size_t x) const {
  const auto c = g.coordinates(x);
  std::size_t image = 0;
  for (std::size_t i = 0; i < c.size(); ++i) image = g.add(image, g.scale(generator_images[i], c[i]));
  return image;
}

std::vector<std::size_t> Automorphism::table(const FiniteAbelian& g) const {
  std::vector<std::size_t> t(g.order(), 0);
  // Walk the group in index order, updating incrementally from x - e_0 etc.
  for (std::size_t x = 1; x < g.order(); ++x) {
    const auto c = g.coordinates(x);
    std::size_t i = 0;
    while (c[i] == 0) ++i;
    // x = (x - e_i) + e_i, and x - e_i has a smaller index.
    const std::size_t prev = x - g.generator(i);
    t[x] = g.add(t[prev], generator_images[i]);
  }
  return t;
}

AutomorphismEnumerator::AutomorphismEnumerator(FiniteAbelian group) : group_(std::move(group)) {
  const auto factors = group_.invariant_factors();
  candidates_.resize(factors.size());
  for (std::size_t x = 0; x < group_.order(); ++x) {
    const std::int64_t ord = group_.element_order(x);
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (ord == factors[i]) candidates_[i].push_back(x);
  }
  for (const auto& c : candidates_)
    if (c.empty()) exhausted_ = true;
  cursor_.assign(factors.size(), 0);
}

std::optional<Automorphism> AutomorphismEnumerator::next() {
  while (!exhausted_) {
    Automorphism a;
    a.generator_images.reserve(cursor_.size());
    for (std::size_t i = 0; i < cursor_.size(); ++i) a.generator_images.push_back(candidates_[i][cursor_[i]]);

    // advance the odometer
    std::size_t i = 0;
    for (; i < cursor_.size(); ++i) {
      if (++cursor_[i] < candidates_[i].size()) break;
      cursor_[i] = 0;
    }
    if (i == cursor_.size()) exhausted_ = true;

    // For cyclic groups an image of full order is already an automorphism.
    if (group_.rank() <= 1) return a;
    const auto t = a.table(group_);
    std::vector<char> hit(group_.order(), 0);
    bool injective = true;
    for (std::size_t y : t) {
      if (hit[y]) {
        injective = false;
        break;
      }
      hit[y] = 1;
    }
    if (injective) return a;
  }
  return std::nullopt;
}

std::vector<Automorphism> aut_enumerate(const FiniteAbelian& g) {
  std::vector<Automorphism> all;
  AutomorphismEnumerator e(g);
  while (auto a = e.next()) all.push_back(std::move(*a));
  return all;
}

// ---------------------------------------------------------------------------
// Quadratic linking functions

QuadraticLinkingFunction::QuadraticLinkingFunction(FiniteAbelian group, std::vector<QmodZ> values,
                                                   std::vector<QmodZ> base_t)
    : group_(std::move(group)), values_(std::move(values)), base_t_(std::move(base_t)) {
  if (values_.size() != group_.order())
    throw InvalidInput("quadratic linking function table does not match the group order");
  if (base_t_.empty()) {
    base_t_.reserve(values_.size());
    for (const auto& v : values_) base_t_.push_back(QmodZ(v.rep() / 12));
  }
  if (base_t_.size() != values_.size())
    throw InvalidInput("t table does not match the group order");
}

QmodZ QuadraticLinkingFunction::linking(std::size_t x, std::size_t y) const {
  return values_.at(group_.add(x, y)) - values_.at(x) - values_.at(y);
}

namespace {

// q values scaled to integer residues mod a common denominator, so the
// quadratic checks run in machine arithmetic.
struct ScaledTable {
  std::int64_t modulus;
  std::vector<std::int64_t> v;

  explicit ScaledTable(std::span<const QmodZ> values) {
    Integer l = 1;
    for (const auto& q : values) l = boost::multiprecision::lcm(l, q.denominator());
    if (l > (std::int64_t{1} << 40)) throw InvalidInput("quadratic linking function denominators too large");
    modulus = to_int64(l);
    v.reserve(values.size());
    for (const auto& q : values) v.push_back(to_int64(q.numerator() * (l / q.denominator())));
  }
  std::int64_t reduce(std::int64_t x) const {
    x %= modulus;
    return x < 0 ? x + modulus : x;
  }
};

}  // namespace

std::optional<std::size_t> QuadraticLinkingFunction::homogeneity_class() const {
  const ScaledTable s(values_);
  const auto& g = group_;
  auto b = [&](std::size_t x, std::size_t y) { return s.reduce(s.v[g.add(x, y)] - s.v[x] - s.v[y]); };
  for (std::size_t kappa = 0; kappa < g.order(); ++kappa) {
    bool ok = true;
    for (std::size_t x = 0; x < g.order() && ok; ++x)
      ok = s.reduce(s.v[x] - s.v[g.negate(x)]) == b(kappa, x);
    if (ok) return kappa;
  }
  return std::nullopt;
}

void QuadraticLinkingFunction::validate() const {
  const auto& g = group_;
  if (!values_.at(0).is_zero()) throw Inconsistent("quadratic linking function: q(0) != 0");
  for (std::size_t x = 0; x < g.order(); ++x)
    if (base_t_[x] * 12 != values_[x])
      throw Inconsistent("quadratic linking function: 12 t != q at element " + std::to_string(x));

  const ScaledTable s(values_);
  auto b = [&](std::size_t x, std::size_t y) { return s.reduce(s.v[g.add(x, y)] - s.v[x] - s.v[y]); };

  // b(x, .) is additive iff b(x, y + e) = b(x, y) + b(x, e) for generators e.
  for (std::size_t gi = 0; gi < g.rank(); ++gi) {
    const std::size_t e = g.generator(gi);
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::int64_t bxe = b(x, e);
      for (std::size_t y = 0; y < g.order(); ++y)
        if (b(x, g.add(y, e)) != s.reduce(b(x, y) + bxe))
          throw Inconsistent("quadratic linking function: associated form is not bilinear");
    }
  }
  // A homomorphism vanishing on all generators is zero.
  for (std::size_t x = 1; x < g.order(); ++x) {
    bool degenerate = true;
    for (std::size_t gi = 0; gi < g.rank() && degenerate; ++gi) degenerate = b(x, g.generator(gi)) == 0;
    if (degenerate)
      throw Inconsistent("quadratic linking function: linking form is degenerate at element " +
                         std::to_string(x));
  }
  if (!homogeneity_class())
    throw Inconsistent("quadratic linking function: no class kappa realises the homogeneity defect");
}

QuadraticLinkingFunction qlf_from_coboundary(const CoboundaryData& cb, std::int64_t bound) {
  const H4Presentation h = snf_cokernel(cb);
  FiniteAbelian g = FiniteAbelian::from_factors(h.invariant_factors, bound);
  std::vector<QmodZ> q, t;
  q.reserve(g.order());
  t.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto c = g.coordinates(x);
    const IntVector lift = h.lift(std::vector<Integer>(c.begin(), c.end()));
    const auto qt = q_t_from_coboundary(cb, lift);
    q.push_back(qt.q);
    t.push_back(qt.t);
  }
  QuadraticLinkingFunction f(std::move(g), std::move(q), std::move(t));
  f.validate();
  return f;
}

QuadraticLinkingFunction qlf_from_t_table(FiniteAbelian group, std::vector<QmodZ> t) {
  std::vector<QmodZ> q;
  q.reserve(t.size());
  for (const auto& v : t) q.push_back(v * 12);
  return {std::move(group), std::move(q), std::move(t)};
}

QuadraticLinkingFunction qlf_pn(std::int64_t n) {
  auto g = FiniteAbelian::cyclic(n);
  std::vector<QmodZ> t;
  for (std::int64_t k = 0; k < n; ++k) t.push_back(t_pn(n, k));
  return qlf_from_t_table(std::move(g), std::move(t));
}

std::optional<Automorphism> iso_qlf(const QuadraticLinkingFunction& q1,
                                    const QuadraticLinkingFunction& q2) {
  const auto& g = q1.group();
  if (!(g == q2.group())) return std::nullopt;
  // An isomorphism permutes values, so the value multisets must agree.
  std::vector<QmodZ> v1(q1.values().begin(), q1.values().end());
  std::vector<QmodZ> v2(q2.values().begin(), q2.values().end());
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  if (v1 != v2) return std::nullopt;

  AutomorphismEnumerator e(g);
  while (auto a = e.next()) {
    bool ok = true;
    for (std::size_t x = 0; x < g.order() && ok; ++x) ok = q1(x) == q2(a->apply(g, x));
    if (ok) return a;
  }
  return std::nullopt;
}

PairVerdict classify_pair(const QuadraticLinkingFunction& m, const QuadraticLinkingFunction& n,
                          const QmodZ& mu_m, const QmodZ& mu_n) {
  auto witness = iso_qlf(m, n);
  if (!witness) return {PairVerdictKind::distinct, std::nullopt, std::nullopt, false};
  const QmodZ diff = mu_n - mu_m;
  const auto kind = diff.is_zero() ? PairVerdictKind::diffeomorphic
                                   : PairVerdictKind::almost_diffeomorphic_only;
  return {kind, std::move(witness), diff, diff.divides_into(28)};
}

std::string_view to_string(PairVerdictKind kind) {
  switch (kind) {
    case PairVerdictKind::diffeomorphic:
      return "diffeomorphic";
    case PairVerdictKind::almost_diffeomorphic_only:
      return "almost_diffeomorphic_only";
    case PairVerdictKind::distinct:
      return "distinct";
  }
  return "unknown";
}

std::vector<BundleClass> bun_enumerate(const QuadraticLinkingFunction& q) {
  std::vector<BundleClass> classes;
  classes.reserve(12 * q.group().order());
  for (std::size_t c = 0; c < q.group().order(); ++c)
    for (int s = 0; s < 12; ++s) classes.push_back({c, q.base_t(c) + QmodZ(Integer(s), Integer(12))});
  return classes;
}

std::optional<TIsomorphism> t_iso(const QuadraticLinkingFunction& m,
                                  const QuadraticLinkingFunction& n) {
  auto a = iso_qlf(m, n);
  if (!a) return std::nullopt;
  const auto target = bun_enumerate(n);
  const std::set<BundleClass> target_set(target.begin(), target.end());
  TIsomorphism iso{*a, {}};
  for (const auto& e : bun_enumerate(m)) {
    BundleClass image{a->apply(m.group(), e.c2), e.t};
    if (!target_set.contains(image))
      throw Inconsistent("t_iso: induced bundle class is missing from Bun(N)");
    iso.bundle_map.emplace_back(e, image);
  }
  return iso;
}

namespace {

Integer parse_spec_integer(std::string_view s) {
  const Rational r = parse_rational(s);
  if (boost::multiprecision::denominator(r) != 1)
    throw InvalidInput("expected an integer in manifold spec, got '" + std::string(s) + "'");
  return boost::multiprecision::numerator(r);
}

}  // namespace

CoboundaryData parse_manifold_spec(std::string_view spec) {
  constexpr std::string_view bundle_prefix = "sphere-bundle:";
  constexpr std::string_view file_prefix = "file:";
  if (spec.starts_with(bundle_prefix)) {
    spec.remove_prefix(bundle_prefix.size());
    const auto comma = spec.find(',');
    if (comma == std::string_view::npos)
      throw InvalidInput("sphere-bundle spec must be 'sphere-bundle:n,p'");
    const SphereBundle7 m(parse_spec_integer(spec.substr(0, comma)),
                          parse_spec_integer(spec.substr(comma + 1)));
    return CoboundaryData::rank_one(m.n(), m.p());
  }
  if (spec.starts_with(file_prefix)) {
    spec.remove_prefix(file_prefix.size());
    return CoboundaryData::load(std::string(spec));
  }
  throw InvalidInput("manifold spec must be 'sphere-bundle:n,p' or 'file:<path>'");
}

}  // namespace tinv
