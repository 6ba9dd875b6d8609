#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "partcong/certificate.hpp"

namespace partcong {

// A certificate with the same key but a different payload is already stored.
class CatalogConflict : public Error {
 public:
  using Error::Error;
};

struct CatalogQuery {
  std::optional<u64> m;
  std::optional<unsigned> i;
  std::optional<u64> ell_min;
  std::optional<u64> ell_max;
};

// Append-only JSON-lines file keyed by (m, i, ell, basis hash).
class Catalog {
 public:
  explicit Catalog(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }

  // True when a line was written; false when an identical entry already exists.
  bool append(const CongruenceCertificate& cert) const;
  // Entries in file order. IoError on unreadable files, SchemaMismatch on foreign lines.
  std::vector<CongruenceCertificate> query(const CatalogQuery& filter = {}) const;

 private:
  std::filesystem::path path_;
};

}  // namespace partcong
