// tinv: exact t-invariants, linking forms and classification of 2-connected
// rational homology 7-spheres from the command line.

#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tinv/charclass.hpp"
#include "tinv/checks.hpp"
#include "tinv/classify.hpp"
#include "tinv/closedforms.hpp"
#include "tinv/coboundary.hpp"
#include "tinv/errors.hpp"
#include "tinv/exotic.hpp"
#include "tinv/homotopy.hpp"

namespace {

using nlohmann::json;
using namespace tinv;

constexpr int kExitInvalid = 2;
constexpr int kExitInconsistent = 3;

bool g_json = false;

json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return z.convert_to<long long>();
  return z.str();
}

json qz_json(const QmodZ& q) {
  return {{"num", integer_json(q.numerator())}, {"den", integer_json(q.denominator())}, {"modulo", 1}};
}

std::string qz_text(const QmodZ& q) { return q.str() + " (mod 1)"; }

Integer parse_integer(const std::string& text) {
  const Rational r = parse_rational(text);
  if (boost::multiprecision::denominator(r) != 1) throw InvalidInput("expected an integer, got '" + text + "'");
  return boost::multiprecision::numerator(r);
}

int parse_int(const std::string& text) { return static_cast<int>(to_int64(parse_integer(text))); }

void emit_qz(const QmodZ& q) {
  if (g_json)
    std::cout << qz_json(q).dump() << "\n";
  else
    std::cout << qz_text(q) << "\n";
}

// Named fields: human output one "name = value" line each, JSON one object.
void emit_fields(const std::vector<std::pair<std::string, json>>& fields,
                 const std::vector<std::pair<std::string, std::string>>& text) {
  if (g_json) {
    json out = json::object();
    for (const auto& [k, v] : fields) out[k] = v;
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& [k, v] : text) std::cout << k << " = " << v << "\n";
  }
}

std::string group_text(const FiniteAbelian& g) {
  if (g.rank() == 0) return "0";
  std::string s;
  for (auto d : g.invariant_factors()) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
  return s;
}

json group_json(const FiniteAbelian& g) {
  json f = json::array();
  for (auto d : g.invariant_factors()) f.push_back(d);
  return f;
}

json element_json(const FiniteAbelian& g, std::size_t x) {
  json c = json::array();
  for (auto v : g.coordinates(x)) c.push_back(v);
  return c;
}

std::vector<Integer> parse_vector(const std::string& text) {
  std::vector<Integer> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_integer(item));
  return v;
}

std::string verdict_text(KsBit bit) {
  switch (bit) {
    case KsBit::zero:
      return "0";
    case KsBit::one:
      return "1";
    case KsBit::inconsistent:
      return "inconsistent";
  }
  return "inconsistent";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact t-invariants of quaternionic line bundles and classification of 2-connected "
               "rational homology 7-spheres"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "Emit JSON instead of human-readable text");

  // t-pullback
  std::string c_arg, k_arg, method = "closed";
  auto* t_pullback = app.add_subcommand("t-pullback", "t-invariant of p_k^* E_c on S^{4k-1}");
  t_pullback->add_option("--c", c_arg, "Second Chern coefficient c")->required();
  t_pullback->add_option("--k", k_arg, "k >= 2")->required();
  t_pullback->add_option("--method", method, "series | closed | tbar")
      ->check(CLI::IsMember({"series", "closed", "tbar"}));

  auto* fg_check = app.add_subcommand("fg-check", "Feder-Gitler admissibility of c up to HP^k");
  fg_check->add_option("--c", c_arg)->required();
  fg_check->add_option("--k", k_arg)->required();

  std::string n_arg, p_arg;
  auto* sphere_bundle = app.add_subcommand("sphere-bundle", "t, q, b and mu on M_{n,p} for the class [k]");
  sphere_bundle->add_option("--n", n_arg, "Euler number (nonzero)")->required();
  sphere_bundle->add_option("--p", p_arg, "Spin class, congruent to n mod 2")->required();
  sphere_bundle->add_option("--k", k_arg, "Lift of the class in Z/n")->required();

  std::string pm, qm, pp, qp;
  bool pi2 = false;
  auto* gwz = app.add_subcommand("gwz", "t-invariant on the GWZ manifold M_{(p-,q-),(p+,q+)}");
  gwz->add_option("--pm", pm)->required();
  gwz->add_option("--qm", qm)->required();
  gwz->add_option("--pp", pp)->required();
  gwz->add_option("--qp", qp)->required();
  gwz->add_option("--k", k_arg)->required();
  gwz->add_flag("--pi2", pi2, "Use the second Seifert fibration");

  auto* pn = app.add_subcommand("pn", "t-invariant of pi_1^* E on P_n");
  pn->add_option("--n", n_arg)->required();
  pn->add_option("--k", k_arg)->required();

  auto* sphere = app.add_subcommand("sphere", "t-invariant and admissibility of p_k^* E_c, k in {2,3,4}");
  sphere->add_option("--k", k_arg)->required()->check(CLI::IsMember({"2", "3", "4"}));
  sphere->add_option("--c", c_arg)->required();

  std::string file_arg, x_arg;
  auto* coboundary = app.add_subcommand("coboundary", "q, t, mu and H^4 from a coboundary JSON file");
  coboundary->add_option("--file", file_arg)->required();
  coboundary->add_option("--x", x_arg, "Comma separated integer vector k1,k2,...")->required();

  std::string spec_a, spec_b, mu_a, mu_b;
  auto* classify = app.add_subcommand("classify", "Decide (almost) diffeomorphism of two manifolds");
  classify->add_option("--a", spec_a, "sphere-bundle:n,p or file:<coboundary.json>")->required();
  classify->add_option("--b", spec_b, "sphere-bundle:n,p or file:<coboundary.json>")->required();
  classify->add_option("--mu-a", mu_a, "Eells-Kuiper invariant of a (default: from the coboundary)");
  classify->add_option("--mu-b", mu_b, "Eells-Kuiper invariant of b (default: from the coboundary)");

  std::string spec_arg;
  auto* bun = app.add_subcommand("bun", "List Bun(M) as (c2, t) pairs");
  bun->add_option("--spec", spec_arg, "sphere-bundle:n,p or file:<coboundary.json>")->required();

  bool demo = false;
  auto* exotic = app.add_subcommand("exotic", "t-table of M_{n,p} and detection of exotic homeomorphisms");
  exotic->add_option("--n", n_arg, "Even Euler number")->required();
  exotic->add_option("--p", p_arg)->required();
  exotic->add_flag("--demo", demo, "Twist by the pinch map and recover the Kirby-Siebenmann bit");

  auto* paper_checks = app.add_subcommand("paper-checks", "Re-derive every published value and property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*t_pullback) {
      const Integer c = parse_integer(c_arg);
      const int k = parse_int(k_arg);
      QmodZ t;
      if (method == "series") {
        t = t_pullback_series(c, k);
      } else if (method == "tbar") {
        if (k < 2) throw InvalidInput("k must be at least 2");
        t = qz_normalize(Rational(a_const(k)) * tbar_poly(k)(Rational(c)));
      } else {
        t = t_pullback_closed(c, k);
      }
      emit_qz(t);
    } else if (*fg_check) {
      const auto v = fg_admissible(parse_integer(c_arg), parse_int(k_arg));
      json out{{"admissible", v.admissible()}, {"failing_j", nullptr}};
      if (v.failing_j) out["failing_j"] = *v.failing_j;
      std::cout << out.dump() << "\n";
    } else if (*sphere_bundle) {
      const SphereBundle7 m(parse_integer(n_arg), parse_integer(p_arg));
      const auto inv = sphere_bundle_invariants(m, parse_integer(k_arg));
      emit_fields({{"t", qz_json(inv.t)}, {"q", qz_json(inv.q)}, {"b_kk", qz_json(inv.b_kk)}, {"mu", qz_json(inv.mu)}},
                  {{"t", qz_text(inv.t)}, {"q", qz_text(inv.q)}, {"b_kk", qz_text(inv.b_kk)}, {"mu", qz_text(inv.mu)}});
    } else if (*gwz) {
      const GwzManifold m(parse_integer(pm), parse_integer(qm), parse_integer(pp), parse_integer(qp));
      const QmodZ t = t_gwz(m, parse_integer(k_arg), pi2 ? SeifertFibration::second : SeifertFibration::first);
      emit_fields({{"n", integer_json(m.n())}, {"t", qz_json(t)}}, {{"n", m.n().str()}, {"t", qz_text(t)}});
    } else if (*pn) {
      emit_qz(t_pn(parse_integer(n_arg), parse_integer(k_arg)));
    } else if (*sphere) {
      const int k = parse_int(k_arg);
      const Integer c = parse_integer(c_arg);
      const QmodZ t = t_pullback_closed(c, k);
      const bool exists = fg_admissible(c, k - 1).admissible();
      const bool extends = fg_admissible(c, k).admissible();
      std::vector<std::pair<std::string, json>> fields{
          {"t", qz_json(t)}, {"bundle_exists", exists}, {"trivial_on_sphere", extends}};
      std::vector<std::pair<std::string, std::string>> text{
          {"t", qz_text(t)},
          {"bundle_exists", exists ? "yes" : "no"},
          {"trivial_on_sphere", extends ? "yes" : "no"}};
      if (k == 2) {
        const auto e = fc_hopf(c);
        const int stab = stabilize_pi7s4(e);
        fields.push_back({"pi7_s4", {{"hopf", integer_json(e.hopf_mult)}, {"torsion", e.torsion}}});
        fields.push_back({"stabilisation_mod_24", stab});
        text.push_back({"pi7_s4", "(" + e.hopf_mult.str() + ", [" + std::to_string(e.torsion) + "])"});
        text.push_back({"stabilisation_mod_24", std::to_string(stab)});
      }
      emit_fields(fields, text);
    } else if (*coboundary) {
      const CoboundaryData cb = CoboundaryData::load(file_arg);
      const auto xs = parse_vector(x_arg);
      IntVector x(static_cast<Eigen::Index>(xs.size()));
      for (std::size_t i = 0; i < xs.size(); ++i) x(static_cast<Eigen::Index>(i)) = xs[i];
      const auto qt = q_t_from_coboundary(cb, x);
      const QmodZ mu = mu_hat(cb);
      const H4Presentation h = snf_cokernel(cb);
      json factors = json::array();
      std::string gtext;
      for (const auto& d : h.invariant_factors) {
        factors.push_back(integer_json(d));
        gtext += (gtext.empty() ? "" : " + ") + std::string("Z/") + d.str();
      }
      emit_fields({{"q", qz_json(qt.q)}, {"t", qz_json(qt.t)}, {"mu", qz_json(mu)}, {"group", factors}},
                  {{"q", qz_text(qt.q)}, {"t", qz_text(qt.t)}, {"mu", qz_text(mu)},
                   {"group", gtext.empty() ? "0" : gtext}});
    } else if (*classify) {
      const CoboundaryData a = parse_manifold_spec(spec_a);
      const CoboundaryData b = parse_manifold_spec(spec_b);
      const QmodZ mua = mu_a.empty() ? mu_hat(a) : QmodZ(parse_rational(mu_a));
      const QmodZ mub = mu_b.empty() ? mu_hat(b) : QmodZ(parse_rational(mu_b));
      const auto qa = qlf_from_coboundary(a);
      const auto qb = qlf_from_coboundary(b);
      const auto v = classify_pair(qa, qb, mua, mub);
      json out{{"verdict", std::string(to_string(v.kind))}};
      std::vector<std::pair<std::string, std::string>> text{{"verdict", std::string(to_string(v.kind))}};
      if (v.witness) {
        json images = json::array();
        std::string wtext;
        for (auto g : v.witness->generator_images) {
          images.push_back(element_json(qa.group(), g));
          wtext += (wtext.empty() ? "" : " ") + element_json(qa.group(), g).dump();
        }
        out["witness"] = images;
        text.push_back({"witness", wtext.empty() ? "identity (trivial group)" : wtext});
      }
      if (v.mu_difference) {
        out["mu_difference"] = qz_json(*v.mu_difference);
        out["exotic_sphere"] = v.discrepancy_is_exotic_sphere;
        text.push_back({"mu_difference", qz_text(*v.mu_difference)});
        text.push_back({"exotic_sphere", v.discrepancy_is_exotic_sphere ? "yes" : "no"});
      }
      if (g_json)
        std::cout << out.dump() << "\n";
      else
        for (const auto& [k, val] : text) std::cout << k << " = " << val << "\n";
    } else if (*bun) {
      const auto q = qlf_from_coboundary(parse_manifold_spec(spec_arg));
      json classes = json::array();
      for (const auto& e : bun_enumerate(q))
        classes.push_back({{"c2", element_json(q.group(), e.c2)}, {"t", qz_json(e.t)}});
      std::cout << json{{"group", group_json(q.group())}, {"classes", classes}}.dump() << "\n";
    } else if (*exotic) {
      const SphereBundle7 m(parse_integer(n_arg), parse_integer(p_arg));
      const TTable tab = TTable::untwisted(m);
      if (demo) {
        const KsBit bit = detect_ks(tab, pinch_twisted_table(tab));
        emit_fields({{"ks", verdict_text(bit)}}, {{"KS", verdict_text(bit)}});
        if (bit == KsBit::inconsistent) return kExitInconsistent;
      } else {
        json entries = json::array();
        for (std::size_t c2 = 0; c2 < tab.order(); ++c2)
          for (int s = 0; s < 12; ++s) {
            if (g_json)
              entries.push_back({{"c2", c2}, {"s", s}, {"t", qz_json(tab.at(c2, s))}});
            else
              std::cout << c2 << " " << s << " " << qz_text(tab.at(c2, s)) << "\n";
          }
        if (g_json) std::cout << entries.dump() << "\n";
      }
    } else if (*paper_checks) {
      bool all = true;
      json out = json::array();
      for (const auto& r : run_paper_checks()) {
        all &= r.pass;
        if (g_json)
          out.push_back({{"name", r.name}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
        else
          std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": expected " << r.expected
                    << ", computed " << r.computed << "\n";
      }
      if (g_json) std::cout << out.dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Inconsistent& e) {
    std::cerr << "inconsistent: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return 0;
}
