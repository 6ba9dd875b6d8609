#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "partcong/modforms.hpp"
#include "partcong/partition.hpp"

namespace partcong {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "partcong 0.1.0";

struct CertificateBasis {
  std::string mode;
  std::string descriptor;
  std::string hash;
};

// Record of p((m^j ell^(2K-1) n + 1)/24) = 0 mod m^i for j >= i, with the data it rests on.
struct CongruenceCertificate {
  u64 m = 0;
  unsigned i = 1;
  u64 ell = 0;

  SpaceParams space;
  std::size_t t = 0;
  CertificateBasis basis;

  u64 modulus = 0;                       // m^i
  std::vector<std::vector<u64>> A;       // Hecke matrix rows, reduced mod m^i
  std::size_t residual_depth = 0;

  int e = 0;
  u64 K = 0;                             // PGL order of X
  std::optional<u64> k_lcm;              // eigen_split lcm, prime modulus only
  u64 M_period = 0;                      // GL order of X
  u64 pgl_scalar = 0;                    // X^K = pgl_scalar I
  u64 exponent = 0;                      // 2K - 1

  std::string statement;
  std::vector<std::string> conditions;
  std::optional<std::string> statement_lcm;

  std::vector<SpotCheck> spot_checks;

  std::size_t series_precision = 0;
  std::string tool_version = kToolVersion;
};

// Schema-versioned JSON with fixed field order; integers are decimal strings.
std::string to_json(const CongruenceCertificate& cert);
// SchemaMismatch on a different schema version, InvalidArgument on malformed input.
CongruenceCertificate certificate_from_json(const std::string& text);

}  // namespace partcong
