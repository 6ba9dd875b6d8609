#include "partcong/certificate.hpp"

#include <json.hpp>

namespace partcong {

namespace {

using Json = nlohmann::ordered_json;

std::string dec(u64 v) { return std::to_string(v); }
std::string dec(int v) { return std::to_string(v); }
std::string dec(unsigned v) { return std::to_string(v); }
std::string dec(const BigInt& v) { return v.get_str(); }

u64 read_u64(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidArgument("expected a non-negative decimal string, got '" + s + "'");
  }
  return std::stoull(s);
}

int read_int(const Json& j) { return std::stoi(j.get<std::string>()); }

SpotStatus status_from_string(const std::string& s) {
  if (s == "pass") return SpotStatus::Pass;
  if (s == "fail") return SpotStatus::Fail;
  if (s == "infeasible") return SpotStatus::Infeasible;
  throw InvalidArgument("unknown spot-check status '" + s + "'");
}

}  // namespace

std::string to_json(const CongruenceCertificate& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["m"] = dec(c.m);
  j["i"] = dec(c.i);
  j["ell"] = dec(c.ell);

  Json space;
  space["r"] = dec(c.space.r);
  space["s"] = dec(c.space.s);
  space["t"] = dec(static_cast<u64>(c.t));
  space["lambda"] = dec(c.space.lambda());
  space["basis"] = Json{{"mode", c.basis.mode}, {"descriptor", c.basis.descriptor}, {"hash", c.basis.hash}};
  j["space"] = space;

  Json rows = Json::array();
  for (const auto& row : c.A) {
    Json r = Json::array();
    for (u64 x : row) r.push_back(dec(x));
    rows.push_back(r);
  }
  j["hecke"] = Json{{"modulus", dec(c.modulus)}, {"rows", rows}, {"residual_depth", dec(static_cast<u64>(c.residual_depth))}};

  j["e"] = dec(c.e);
  j["K"] = dec(c.K);
  j["k_lcm"] = c.k_lcm ? Json(dec(*c.k_lcm)) : Json(nullptr);
  j["M_period"] = dec(c.M_period);
  j["pgl_scalar"] = dec(c.pgl_scalar);
  j["exponent"] = dec(c.exponent);

  Json statement;
  statement["text"] = c.statement;
  statement["conditions"] = c.conditions;
  statement["text_lcm"] = c.statement_lcm ? Json(*c.statement_lcm) : Json(nullptr);
  j["statement"] = statement;

  Json checks = Json::array();
  for (const SpotCheck& s : c.spot_checks) {
    Json e;
    e["n"] = dec(s.n);
    e["argument"] = dec(s.argument);
    e["residue"] = s.residue ? Json(dec(*s.residue)) : Json(nullptr);
    e["status"] = to_string(s.status);
    checks.push_back(e);
  }
  j["spot_checks"] = checks;

  j["provenance"] = Json{{"basis_hash", c.basis.hash},
                         {"series_precision", dec(static_cast<u64>(c.series_precision))},
                         {"tool_version", c.tool_version}};
  return j.dump();
}

CongruenceCertificate certificate_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema")) throw SchemaMismatch("certificate has no schema field");
  const std::string schema = j["schema"].is_string() ? j["schema"].get<std::string>() : j["schema"].dump();
  if (schema != kSchemaVersion) {
    throw SchemaMismatch("certificate schema " + schema + ", expected " + kSchemaVersion);
  }

  try {
    CongruenceCertificate c;
    c.m = read_u64(j.at("m"));
    c.i = static_cast<unsigned>(read_u64(j.at("i")));
    c.ell = read_u64(j.at("ell"));
    const Json& space = j.at("space");
    c.space = SpaceParams::make(read_int(space.at("r")), read_int(space.at("s")));
    c.space.m = c.m;
    c.space.i = c.i;
    c.t = read_u64(space.at("t"));
    const Json& basis = space.at("basis");
    c.basis = {basis.at("mode").get<std::string>(), basis.at("descriptor").get<std::string>(),
               basis.at("hash").get<std::string>()};
    const Json& hecke = j.at("hecke");
    c.modulus = read_u64(hecke.at("modulus"));
    for (const Json& row : hecke.at("rows")) {
      std::vector<u64> r;
      for (const Json& x : row) r.push_back(read_u64(x));
      c.A.push_back(std::move(r));
    }
    c.residual_depth = read_u64(hecke.at("residual_depth"));
    c.e = read_int(j.at("e"));
    c.K = read_u64(j.at("K"));
    if (!j.at("k_lcm").is_null()) c.k_lcm = read_u64(j.at("k_lcm"));
    c.M_period = read_u64(j.at("M_period"));
    c.pgl_scalar = read_u64(j.at("pgl_scalar"));
    c.exponent = read_u64(j.at("exponent"));
    const Json& st = j.at("statement");
    c.statement = st.at("text").get<std::string>();
    c.conditions = st.at("conditions").get<std::vector<std::string>>();
    if (!st.at("text_lcm").is_null()) c.statement_lcm = st.at("text_lcm").get<std::string>();
    for (const Json& e : j.at("spot_checks")) {
      SpotCheck s;
      s.n = read_u64(e.at("n"));
      s.argument = BigInt(e.at("argument").get<std::string>());
      if (!e.at("residue").is_null()) s.residue = read_u64(e.at("residue"));
      s.status = status_from_string(e.at("status").get<std::string>());
      c.spot_checks.push_back(std::move(s));
    }
    const Json& prov = j.at("provenance");
    c.series_precision = read_u64(prov.at("series_precision"));
    c.tool_version = prov.at("tool_version").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidArgument(std::string("malformed certificate number: ") + e.what());
  }
}

}  // namespace partcong
