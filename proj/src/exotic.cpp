#include "tinv/exotic.hpp"

#include "tinv/errors.hpp"

namespace tinv {

TTable::TTable(SphereBundle7 manifold, std::vector<QmodZ> entries)
    : manifold_(std::move(manifold)), entries_(std::move(entries)) {
  const Integer order = manifold_.order();
  if (order % 2 != 0)
    throw InvalidInput("no exotic homeomorphisms exist: H^4(M) = Z/" + order.str() +
                       " has no 2-torsion");
  if (Integer(entries_.size()) != 12 * order)
    throw InvalidInput("t-table must have 12 |n| entries");
  for (const auto& e : entries_)
    if (!e.divides_into(24 * order))
      throw InvalidInput("t-table entry " + e.str() + " has denominator not dividing 24n");
}

TTable TTable::untwisted(const SphereBundle7& manifold) {
  const auto order = static_cast<std::size_t>(to_int64(manifold.order()));
  std::vector<QmodZ> entries;
  entries.reserve(12 * order);
  for (std::size_t c2 = 0; c2 < order; ++c2) {
    const QmodZ base = sphere_bundle_invariants(manifold, Integer(c2)).t;
    for (int s = 0; s < 12; ++s) entries.push_back(base + QmodZ(Integer(s), Integer(12)));
  }
  return {manifold, std::move(entries)};
}

void TTable::set(std::size_t c2, int s, QmodZ value) {
  entries_.at(12 * c2 + static_cast<std::size_t>(s)) = std::move(value);
}

TTable pinch_twisted_table(const TTable& table) {
  TTable twisted = table;
  const QmodZ half(Integer(1), Integer(2));
  for (std::size_t c2 = 1; c2 < table.order(); c2 += 2)
    for (int s = 0; s < 12; ++s) twisted.set(c2, s, table.at(c2, s) + half);
  return twisted;
}

KsBit detect_ks(const TTable& table_m, const TTable& table_n_pulled) {
  if (table_m.manifold().n() != table_n_pulled.manifold().n() ||
      table_m.manifold().p() != table_n_pulled.manifold().p())
    throw InvalidInput("detect_ks: tables describe different manifolds");

  const QmodZ half(Integer(1), Integer(2));
  // kappa is read off at the odd class c2 = 1, which exists since n is even.
  const QmodZ probe = table_n_pulled.at(1, 0) - table_m.at(1, 0);
  int kappa;
  if (probe.is_zero())
    kappa = 0;
  else if (probe == half)
    kappa = 1;
  else
    return KsBit::inconsistent;

  for (std::size_t c2 = 0; c2 < table_m.order(); ++c2)
    for (int s = 0; s < 12; ++s) {
      const QmodZ delta = table_n_pulled.at(c2, s) - table_m.at(c2, s);
      const bool odd = c2 % 2 == 1;
      const QmodZ expected = (odd && kappa == 1) ? half : QmodZ();
      if (delta != expected) return KsBit::inconsistent;
    }
  return kappa == 1 ? KsBit::one : KsBit::zero;
}

}  // namespace tinv
