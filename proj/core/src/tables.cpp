#include "partcong/tables.hpp"

#include <algorithm>
#include <sstream>

#include "partcong/fp_linalg.hpp"

namespace partcong {

namespace {

struct Eigenvector {
  std::size_t lead = 0;
  std::vector<u64> c;
};

Matrix<ModRing> to_matrix(const std::vector<std::vector<u64>>& rows, const ModRing& ring) {
  Matrix<ModRing> A(ring, rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) A(i, j) = rows[i][j];
  return A;
}

std::vector<u64> row_times(const std::vector<u64>& c, const Matrix<ModRing>& A) {
  const ModRing& ring = A.ring();
  std::vector<u64> out(A.cols(), 0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[j] = ring.add(out[j], ring.mul(c[i], A(i, j)));
  return out;
}

// Normalized left eigenvectors when A has t distinct eigenvalues in F_p.
std::optional<std::vector<Eigenvector>> split_eigenvectors(const Matrix<ModRing>& A) {
  const u64 p = A.ring().modulus().value();
  const fp::Poly chi = fp::charpoly(A);
  if (!fp::is_squarefree(chi, p)) return std::nullopt;
  const auto factors = fp::factor_squarefree(chi, p);
  if (factors.size() != A.rows()) return std::nullopt;
  std::vector<Eigenvector> out;
  for (const fp::Poly& g : factors) {
    const u64 root = (p - g[0]) % p;
    const auto kernel = fp::left_kernel(A - Matrix<ModRing>::scalar(A.ring(), A.rows(), root));
    if (kernel.size() != 1) return std::nullopt;
    Eigenvector v{0, kernel.front()};
    while (v.c[v.lead] == 0) ++v.lead;
    const u64 inv = A.ring().inverse(v.c[v.lead]);
    for (u64& x : v.c) x = A.ring().mul(x, inv);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const Eigenvector& a, const Eigenvector& b) {
    return a.lead != b.lead ? a.lead < b.lead : a.c < b.c;
  });
  return out;
}

std::string column_label(const TableArtifact& t, std::size_t k) {
  return t.t == 1 ? "a" : "a" + std::to_string(k + 1);
}

}  // namespace

TableArtifact tables(u64 m, const std::vector<u64>& ells, const CertifyOptions& options, unsigned i) {
  if (ells.empty()) throw InvalidArgument("tables need at least one ell");
  const SpaceContext context(m, i, ells, options);
  TableArtifact out;
  out.m = m;
  out.i = i;
  out.t = context.basis().dimension();
  for (u64 ell : ells) out.certificates.push_back(certify(m, i, ell, options, &context));
  out.e = out.certificates.front().e;

  const ModRing& ring = context.basis().ring();
  std::optional<std::vector<Eigenvector>> eig;
  if (ring.modulus().is_prime()) {
    for (const auto& cert : out.certificates) {
      eig = split_eigenvectors(to_matrix(cert.A, ring));
      if (eig) break;
    }
  }

  for (const auto& cert : out.certificates) {
    TableRow row;
    row.ell = cert.ell;
    row.power = pow_mod(cert.ell % cert.modulus, static_cast<u64>(cert.e), cert.modulus);
    row.K = cert.K;
    row.k = cert.k_lcm.value_or(cert.K);
    row.M_period = cert.M_period;
    if (eig) {
      const Matrix<ModRing> A = to_matrix(cert.A, ring);
      for (const Eigenvector& v : *eig) {
        const std::vector<u64> image = row_times(v.c, A);
        const u64 a = image[v.lead];
        for (std::size_t j = 0; j < image.size(); ++j) {
          if (image[j] != ring.mul(a, v.c[j])) {
            throw Error("Hecke matrices at ell = " + std::to_string(cert.ell) + " do not share an eigenbasis");
          }
        }
        row.a_values.push_back(a);
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string to_csv(const TableArtifact& table) {
  std::ostringstream os;
  os << "ell";
  for (std::size_t k = 0; k < table.t; ++k) os << ',' << column_label(table, k);
  os << ",power,k,K,M_period\n";
  for (const TableRow& row : table.rows) {
    os << row.ell;
    for (std::size_t k = 0; k < table.t; ++k) {
      os << ',';
      if (k < row.a_values.size()) os << row.a_values[k];
    }
    os << ',' << row.power << ',' << row.k << ',' << row.K << ',' << row.M_period << '\n';
  }
  return os.str();
}

std::string to_text(const TableArtifact& table) {
  std::vector<std::vector<std::string>> lines;
  auto add = [&](std::string label, auto value_of) {
    std::vector<std::string> line{std::move(label)};
    for (const TableRow& row : table.rows) line.push_back(value_of(row));
    lines.push_back(std::move(line));
  };
  add("ell", [](const TableRow& r) { return std::to_string(r.ell); });
  for (std::size_t k = 0; k < table.t; ++k) {
    add(table.t == 1 ? "a" : "a(" + std::to_string(k + 1) + ")", [k](const TableRow& r) {
      return k < r.a_values.size() ? std::to_string(r.a_values[k]) : std::string("-");
    });
  }
  add("ell^" + std::to_string(table.e), [](const TableRow& r) { return std::to_string(r.power); });
  add("k", [](const TableRow& r) { return std::to_string(r.k); });
  add("K", [](const TableRow& r) { return std::to_string(r.K); });
  add("M", [](const TableRow& r) { return std::to_string(r.M_period); });

  std::vector<std::size_t> width(lines.front().size(), 0);
  for (const auto& line : lines)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream os;
  for (const auto& line : lines) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        os << line[c] << std::string(width[c] - line[c].size(), ' ') << " |";
      } else {
        os << ' ' << std::string(width[c] - line[c].size(), ' ') << line[c];
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace partcong
