#pragma once

#include <string>
#include <vector>

#include "partcong/pipeline.hpp"

namespace partcong {

struct TableRow {
  u64 ell = 0;
  std::vector<u64> a_values;  // eigenvalues a^(1..t), empty when no common eigenbasis was found
  u64 power = 0;              // ell^e mod m^i
  u64 k = 0;                  // eigen_split lcm when i = 1, else K
  u64 K = 0;
  u64 M_period = 0;
};

struct TableArtifact {
  u64 m = 0;
  unsigned i = 1;
  int e = 0;
  std::size_t t = 0;
  std::vector<TableRow> rows;
  std::vector<CongruenceCertificate> certificates;
};

// One shared basis serves every ell. Eigenvalues come from left eigenvectors of
// the first ell whose characteristic polynomial splits into distinct linear
// factors, ordered by the index of their leading coordinate.
TableArtifact tables(u64 m, const std::vector<u64>& ells, const CertifyOptions& options = {}, unsigned i = 1);

// Header: ell, a1..at, power, k, K, M_period.
std::string to_csv(const TableArtifact& table);
// Rows ell, a, ell^e, k, K, M with one column per ell.
std::string to_text(const TableArtifact& table);

}  // namespace partcong
