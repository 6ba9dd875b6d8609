#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "partcong/catalog.hpp"
#include "partcong/pipeline.hpp"
#include "partcong/tables.hpp"

using namespace partcong;
using Json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInfeasible = 2, kUsage = 3 };

struct Globals {
  unsigned modulus_power = 1;
  std::optional<std::size_t> precision_slots;
  u64 order_cap = kDefaultOrderCap;
  u64 partition_budget = kDefaultPartitionBudget;
  std::string basis_mode = "echelon";
  std::string output = "json";
};

CertifyOptions options_from(const Globals& g) {
  CertifyOptions o;
  o.mode = basis_mode_from_string(g.basis_mode);
  o.order_cap = g.order_cap;
  o.partition_budget = g.partition_budget;
  o.precision_slots = g.precision_slots;
  return o;
}

Json rows_json(const std::vector<std::vector<u64>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

std::string join(const std::vector<u64>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

void print_rows_text(const std::vector<std::vector<u64>>& rows) {
  for (const auto& r : rows) std::cout << "  " << join(r) << '\n';
}

int spot_exit(const std::vector<SpotCheck>& checks) {
  int code = kOk;
  for (const SpotCheck& s : checks) {
    if (s.status == SpotStatus::Fail) return kVerifyFailed;
    if (s.status == SpotStatus::Infeasible) code = kInfeasible;
  }
  return code;
}

void print_certificate(const CongruenceCertificate& c, const std::string& output) {
  if (output == "json") {
    std::cout << to_json(c) << '\n';
    return;
  }
  if (output == "csv") {
    std::cout << "m,i,ell,r,s,t,e,K,k_lcm,M_period,exponent\n"
              << c.m << ',' << c.i << ',' << c.ell << ',' << c.space.r << ',' << c.space.s << ',' << c.t << ','
              << c.e << ',' << c.K << ',' << (c.k_lcm ? std::to_string(*c.k_lcm) : "") << ',' << c.M_period << ','
              << c.exponent << '\n';
    return;
  }
  std::cout << "m=" << c.m << " i=" << c.i << " ell=" << c.ell << "  space S_{" << c.space.r << "," << c.space.s
            << "} t=" << c.t << " basis=" << c.basis.mode << " " << c.basis.hash.substr(0, 16) << "\n"
            << "A mod " << c.modulus << ":\n";
  print_rows_text(c.A);
  std::cout << "e=" << c.e << " K=" << c.K << " k_lcm=" << (c.k_lcm ? std::to_string(*c.k_lcm) : "-")
            << " M_period=" << c.M_period << " exponent=" << c.exponent << "\n"
            << c.statement << '\n';
  if (c.statement_lcm) std::cout << *c.statement_lcm << '\n';
  for (const std::string& cond : c.conditions) std::cout << "  " << cond << '\n';
  for (const SpotCheck& s : c.spot_checks) {
    std::cout << "  n=" << s.n << " p(" << s.argument.get_str() << ") = "
              << (s.residue ? std::to_string(*s.residue) : "?") << "  " << to_string(s.status) << '\n';
  }
}

int run_basis(const Globals& g, std::optional<u64> m, std::optional<int> r, std::optional<int> s,
              std::size_t show) {
  SpaceParams params;
  if (m) {
    params = certify_space(*m, g.modulus_power);
  } else if (r && s) {
    params = SpaceParams::make(*r, *s);
  } else {
    std::cerr << "basis: give --m or both --r and --s\n";
    return kUsage;
  }
  const BasisMode mode = basis_mode_from_string(g.basis_mode);
  const BasisRecipe recipe = recipe_for_mode(params, mode);
  const std::size_t slots = std::max(show, recipe.dimension());
  const SrsBasis<IntegerRing> basis = srs_basis(IntegerRing{}, recipe, slots);
  if (g.output == "json") {
    Json j;
    j["r"] = params.r;
    j["s"] = params.s;
    j["t"] = basis.dimension();
    j["sturm_slots"] = sturm_slots(params);
    j["mode"] = to_string(mode);
    j["descriptor"] = recipe.descriptor();
    j["hash"] = recipe.hash();
    Json forms = Json::array();
    for (const auto& f : basis.forms()) {
      Json row = Json::array();
      for (std::size_t n = 0; n < slots; ++n) row.push_back(f[n].get_str());
      forms.push_back(row);
    }
    j["forms"] = forms;
    std::cout << j.dump() << '\n';
  } else if (g.output == "csv") {
    std::cout << "form";
    for (std::size_t n = 0; n < slots; ++n) std::cout << ",slot" << n;
    std::cout << '\n';
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
      std::cout << i;
      for (std::size_t n = 0; n < slots; ++n) std::cout << ',' << basis.form(i)[n].get_str();
      std::cout << '\n';
    }
  } else {
    std::cout << "S_{" << params.r << "," << params.s << "} t=" << basis.dimension()
              << " sturm_slots=" << sturm_slots(params) << " mode=" << to_string(mode) << "\n"
              << recipe.descriptor() << "\nsha256 " << recipe.hash() << '\n';
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
      std::cout << "f" << i << ":";
      for (std::size_t n = 0; n < slots; ++n) std::cout << ' ' << basis.form(i)[n].get_str();
      std::cout << '\n';
    }
  }
  return kOk;
}

int run_hecke(const Globals& g, u64 m, u64 ell) {
  CertifyOptions o = options_from(g);
  o.spot_checks = false;
  const CongruenceCertificate c = certify(m, g.modulus_power, ell, o);
  if (g.output == "json") {
    Json j;
    j["m"] = c.m;
    j["i"] = c.i;
    j["ell"] = c.ell;
    j["modulus"] = c.modulus;
    j["rows"] = rows_json(c.A);
    j["residual_depth"] = c.residual_depth;
    j["e"] = c.e;
    j["K"] = c.K;
    j["k_lcm"] = c.k_lcm ? Json(*c.k_lcm) : Json(nullptr);
    j["M_period"] = c.M_period;
    std::cout << j.dump() << '\n';
  } else if (g.output == "csv") {
    for (const auto& r : c.A) std::cout << join(r, ",") << '\n';
  } else {
    std::cout << "T_{" << ell << "^2} on S_{" << c.space.r << "," << c.space.s << "} mod " << c.modulus
              << " (residual " << c.residual_depth << " slots):\n";
    print_rows_text(c.A);
    std::cout << "K=" << c.K << " k_lcm=" << (c.k_lcm ? std::to_string(*c.k_lcm) : "-") << " M_period=" << c.M_period
              << '\n';
  }
  return kOk;
}

int run_certify(const Globals& g, u64 m, u64 ell, const std::vector<u64>& ns, const std::string& catalog) {
  CertifyOptions o = options_from(g);
  o.n_list = ns;
  const CongruenceCertificate c = certify(m, g.modulus_power, ell, o);
  print_certificate(c, g.output);
  if (!catalog.empty()) Catalog(catalog).append(c);
  return spot_exit(c.spot_checks) == kVerifyFailed ? kVerifyFailed : kOk;
}

int run_tables(const Globals& g, u64 m, const std::vector<u64>& ells, const std::string& catalog, bool spot) {
  CertifyOptions o = options_from(g);
  o.spot_checks = spot;
  const TableArtifact t = tables(m, ells, o, g.modulus_power);
  if (g.output == "csv") {
    std::cout << to_csv(t);
  } else if (g.output == "text") {
    std::cout << to_text(t);
  } else {
    Json j = Json::array();
    for (const TableRow& r : t.rows) {
      j.push_back(Json{{"ell", r.ell}, {"a", r.a_values}, {"power", r.power}, {"k", r.k}, {"K", r.K},
                       {"M_period", r.M_period}});
    }
    std::cout << Json{{"m", t.m}, {"i", t.i}, {"e", t.e}, {"t", t.t}, {"rows", j}}.dump() << '\n';
  }
  if (!catalog.empty()) {
    const Catalog cat(catalog);
    for (const auto& c : t.certificates) cat.append(c);
  }
  for (const auto& c : t.certificates)
    if (spot_exit(c.spot_checks) == kVerifyFailed) return kVerifyFailed;
  return kOk;
}

int run_verify(const Globals& g, u64 m, u64 ell, std::optional<u64> exponent, const std::vector<u64>& ns) {
  SpotCheckRequest req;
  req.m = m;
  req.i = m == 5 ? g.modulus_power + 1 : g.modulus_power;
  req.j = g.modulus_power;
  req.ell = ell;
  req.require_m_coprime = m != 5 && g.modulus_power == 1;
  req.budget = g.partition_budget;
  if (exponent) {
    req.e = *exponent;
  } else {
    CertifyOptions o = options_from(g);
    o.spot_checks = false;
    req.e = certify(m, g.modulus_power, ell, o).exponent;
  }
  req.n_list = ns.empty() ? admissible_n(m, req.j, ell, req.e, 3, req.require_m_coprime) : ns;
  const std::vector<SpotCheck> checks = spot_check_congruence(req);
  if (g.output == "json") {
    Json j = Json::array();
    for (const SpotCheck& s : checks) {
      j.push_back(Json{{"n", s.n},
                       {"argument", s.argument.get_str()},
                       {"residue", s.residue ? Json(*s.residue) : Json(nullptr)},
                       {"status", to_string(s.status)}});
    }
    std::cout << Json{{"m", m}, {"ell", ell}, {"exponent", req.e}, {"checks", j}}.dump() << '\n';
  } else {
    if (g.output == "csv") std::cout << "n,argument,residue,status\n";
    for (const SpotCheck& s : checks) {
      const std::string res = s.residue ? std::to_string(*s.residue) : "";
      if (g.output == "csv") {
        std::cout << s.n << ',' << s.argument.get_str() << ',' << res << ',' << to_string(s.status) << '\n';
      } else {
        std::cout << "n=" << s.n << " p(" << s.argument.get_str() << ") mod " << m << "^" << req.i << " = "
                  << (res.empty() ? "?" : res) << "  " << to_string(s.status) << '\n';
      }
    }
  }
  return spot_exit(checks);
}

int run_period(const Globals& g, u64 m) {
  const PeriodResult p = period_m(m, g.order_cap, basis_mode_from_string(g.basis_mode));
  if (g.output == "json") {
    std::cout << Json{{"m", p.m},     {"t", p.t},           {"preperiod", p.preperiod},
                      {"period", p.period}, {"A_bound", p.A_bound}, {"matrix", rows_json(p.matrix)}}
                     .dump()
              << '\n';
  } else if (g.output == "csv") {
    std::cout << "m,t,preperiod,period,A_bound\n"
              << p.m << ',' << p.t << ',' << p.preperiod << ',' << p.period << ',' << p.A_bound << '\n';
  } else {
    std::cout << "T_{" << m << "^2} mod " << m << ":\n";
    print_rows_text(p.matrix);
    std::cout << "preperiod " << p.preperiod << ", period " << p.period << ", A(m) = " << p.A_bound << '\n';
  }
  return kOk;
}

int run_catalog(const Globals& g, const std::string& file, const CatalogQuery& q) {
  const auto certs = Catalog(file).query(q);
  if (g.output == "csv") {
    std::cout << "m,i,ell,K,k_lcm,M_period,exponent,basis_hash\n";
    for (const auto& c : certs) {
      std::cout << c.m << ',' << c.i << ',' << c.ell << ',' << c.K << ','
                << (c.k_lcm ? std::to_string(*c.k_lcm) : "") << ',' << c.M_period << ',' << c.exponent << ','
                << c.basis.hash << '\n';
    }
  } else {
    for (const auto& c : certs) print_certificate(c, g.output);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition congruence certificates from half-integral weight Hecke matrices"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--modulus-power", g.modulus_power, "Certify modulo m^i")->check(CLI::PositiveNumber);
  app.add_option("--precision-slots", g.precision_slots, "Verification depth in slots (at least t)");
  app.add_option("--order-cap", g.order_cap, "Iteration cap for matrix orders");
  app.add_option("--partition-budget", g.partition_budget, "Largest partition argument evaluated");
  app.add_option("--basis-mode", g.basis_mode, "Basis normalization")
      ->check(CLI::IsMember({"echelon", "paper"}));
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::optional<u64> m_opt;
  std::optional<int> r_opt, s_opt;
  std::size_t show = 8;
  auto* basis = app.add_subcommand("basis", "Basis of S_{r,s} and its leading slots");
  basis->add_option("--m", m_opt, "Use the certification space of m");
  basis->add_option("--r", r_opt, "Eta exponent");
  basis->add_option("--s", s_opt, "Level-one weight");
  basis->add_option("--slots", show, "Slots to print");

  u64 m = 0, ell = 0;
  auto* hecke = app.add_subcommand("hecke", "Hecke matrix and its orders");
  hecke->add_option("--m", m)->required();
  hecke->add_option("--ell", ell)->required();

  std::vector<u64> ns;
  std::string catalog;
  auto* cert = app.add_subcommand("certify", "Issue a congruence certificate");
  cert->add_option("--m", m)->required();
  cert->add_option("--ell", ell)->required();
  cert->add_option("--n", ns, "Spot-check these n")->delimiter(',');
  cert->add_option("--catalog", catalog, "Append to this JSON-lines catalog");

  std::vector<u64> ells;
  bool spot = false;
  auto* tab = app.add_subcommand("tables", "Eigenvalue and order tables");
  tab->add_option("--m", m)->required();
  tab->add_option("--ells", ells)->required()->delimiter(',');
  tab->add_option("--catalog", catalog, "Append every certificate to this catalog");
  tab->add_flag("--spot-check", spot, "Run partition spot checks for each ell");

  std::optional<u64> exponent;
  auto* ver = app.add_subcommand("verify", "Evaluate p at congruence arguments");
  ver->add_option("--m", m)->required();
  ver->add_option("--ell", ell)->required();
  ver->add_option("--exponent", exponent, "Power of ell (default 2K-1)");
  ver->add_option("--n", ns)->delimiter(',');

  auto* per = app.add_subcommand("period", "Eventual period of T_{m^2} mod m");
  per->add_option("--m", m)->required();

  std::string file;
  CatalogQuery q;
  auto* cat = app.add_subcommand("catalog", "Query a certificate catalog");
  cat->add_option("--file", file)->required();
  cat->add_option("--m", q.m);
  cat->add_option("--i", q.i);
  cat->add_option("--ell-min", q.ell_min);
  cat->add_option("--ell-max", q.ell_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*basis) return run_basis(g, m_opt, r_opt, s_opt, show);
    if (*hecke) return run_hecke(g, m, ell);
    if (*cert) return run_certify(g, m, ell, ns, catalog);
    if (*tab) return run_tables(g, m, ells, catalog, spot);
    if (*ver) return run_verify(g, m, ell, exponent, ns);
    if (*per) return run_period(g, m);
    if (*cat) return run_catalog(g, file, q);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InadmissibleN& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowBudget& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const CapExceeded& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
