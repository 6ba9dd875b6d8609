#include "partcong/catalog.hpp"

#include <fstream>
#include <mutex>

namespace partcong {

namespace {

std::mutex& writer_mutex() {
  static std::mutex m;
  return m;
}

bool same_key(const CongruenceCertificate& a, const CongruenceCertificate& b) {
  return a.m == b.m && a.i == b.i && a.ell == b.ell && a.basis.hash == b.basis.hash;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::vector<std::string> lines;
  if (!std::filesystem::exists(path)) return lines;
  std::ifstream in(path);
  if (!in) throw IoError("cannot read catalog " + path.string());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  if (in.bad()) throw IoError("error while reading catalog " + path.string());
  return lines;
}

}  // namespace

Catalog::Catalog(std::filesystem::path path) : path_(std::move(path)) {}

bool Catalog::append(const CongruenceCertificate& cert) const {
  const std::lock_guard<std::mutex> lock(writer_mutex());
  const std::string payload = to_json(cert);
  for (const std::string& line : read_lines(path_)) {
    const CongruenceCertificate existing = certificate_from_json(line);
    if (!same_key(existing, cert)) continue;
    if (line == payload) return false;
    throw CatalogConflict("catalog already holds a different certificate for m=" + std::to_string(cert.m) +
                          ", i=" + std::to_string(cert.i) + ", ell=" + std::to_string(cert.ell));
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot open catalog " + path_.string() + " for appending");
  out << payload << '\n';
  out.flush();
  if (!out) throw IoError("write to catalog " + path_.string() + " failed");
  return true;
}

std::vector<CongruenceCertificate> Catalog::query(const CatalogQuery& f) const {
  std::vector<CongruenceCertificate> out;
  for (const std::string& line : read_lines(path_)) {
    CongruenceCertificate c = certificate_from_json(line);
    if (f.m && c.m != *f.m) continue;
    if (f.i && c.i != *f.i) continue;
    if (f.ell_min && c.ell < *f.ell_min) continue;
    if (f.ell_max && c.ell > *f.ell_max) continue;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace partcong
