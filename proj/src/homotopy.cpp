#include "tinv/homotopy.hpp"

namespace tinv {

namespace {

int mod(const Integer& a, int m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r.convert_to<int>();
}

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

Pi7S4Element::Pi7S4Element(Integer hopf, const Integer& torsion_rep)
    : hopf_mult(std::move(hopf)), torsion(mod(torsion_rep, 12)) {}

int stabilize_pi7s4(const Pi7S4Element& e) { return mod(e.hopf_mult - 2 * Integer(e.torsion), 24); }

Pi7S4Element fc_hopf(const Integer& c) { return {c * c, c * (c - 1) / 2}; }

BunS15Element::BunS15Element(long x_rep, long y_rep, long z_rep)
    : x(mod(x_rep, 84)), y(mod(y_rep, 2)), z(mod(z_rep, 2)) {}

int stabilize_s15(const BunS15Element& e) { return (36 * e.x) % 504; }

}  // namespace tinv
