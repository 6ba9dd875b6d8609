#include "partcong/fp_linalg.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace partcong::fp {

namespace {

std::size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

u64 inv(u64 a, u64 p) {
  auto r = inverse_mod(a, p);
  if (!r) throw NotAUnit("zero divisor in a prime field computation");
  return *r;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  trim(a);
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  const u64 lead_inv = inv(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = mul_mod(a[k + b.size() - 1], lead_inv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = sub_mod(a[k + j], mul_mod(c, b[j], p), p);
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

void equal_degree_split(const Poly& g, std::size_t d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  while (true) {
    Poly a(degree(g));
    for (u64& c : a) c = rng() % p;
    trim(a);
    if (a.empty()) continue;
    // a^{(p^d - 1)/2} = (a a^p ... a^{p^{d-1}})^{(p-1)/2}.
    Poly norm{1}, frob = a;
    for (std::size_t k = 0; k < d; ++k) {
      norm = rem(mul(norm, frob, p), g, p);
      frob = powmod(frob, p, g, p);
    }
    Poly b = sub(powmod(norm, (p - 1) / 2, g, p), Poly{1}, p);
    Poly h = gcd(b, g, p);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(make_monic(divmod(g, h, p).first, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add_mod(c[i + j], mul_mod(a[i], b[j], p), p);
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub_mod(c[i], b[i], p);
  trim(c);
  return c;
}

Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

Poly make_monic(Poly f, u64 p) {
  trim(f);
  if (f.empty()) return f;
  const u64 c = inv(f.back(), p);
  for (u64& x : f) x = mul_mod(x, c, p);
  return f;
}

Poly derivative(const Poly& f, u64 p) {
  Poly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(mul_mod(f[k], k % p, p));
  trim(d);
  return d;
}

Poly powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result{1};
  base = rem(base, f, p);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, base, p), f, p);
    e >>= 1;
    if (e) base = rem(mul(base, base, p), f, p);
  }
  return rem(result, f, p);
}

Poly charpoly(const Matrix<ModRing>& A) {
  const u64 p = A.ring().modulus().value();
  if (!A.ring().modulus().is_prime()) throw InvalidArgument("charpoly needs a prime modulus");
  const std::size_t n = A.rows();
  std::vector<std::vector<u64>> H(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H[i][j] = A(i, j);

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && H[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(H[piv], H[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(H[r][piv], H[r][j + 1]);
    }
    const u64 pinv = inv(H[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      const u64 u = mul_mod(H[i][j], pinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) H[i][c] = sub_mod(H[i][c], mul_mod(u, H[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) H[r][j + 1] = add_mod(H[r][j + 1], mul_mod(u, H[r][i], p), p);
    }
  }

  std::vector<Poly> P(n + 1);
  P[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly x_term(P[m - 1].size() + 1, 0);
    for (std::size_t k = 0; k < P[m - 1].size(); ++k) {
      x_term[k + 1] = P[m - 1][k];
      x_term[k] = sub_mod(x_term[k], mul_mod(H[m - 1][m - 1], P[m - 1][k], p), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, H[m - i][m - i - 1], p);
      const u64 c = mul_mod(t, H[m - i - 1][m - 1], p);
      for (std::size_t k = 0; k < P[m - i - 1].size(); ++k) {
        x_term[k] = sub_mod(x_term[k], mul_mod(c, P[m - i - 1][k], p), p);
      }
    }
    P[m] = x_term;
  }
  return P[n];
}

bool is_squarefree(const Poly& f, u64 p) {
  Poly d = derivative(f, p);
  if (d.empty()) return degree(f) == 0;
  return degree(gcd(f, d, p)) == 0;
}

std::vector<Poly> factor_squarefree(const Poly& f_in, u64 p) {
  if (p == 2) throw InvalidArgument("factorization needs an odd prime");
  Poly f = make_monic(f_in, p);
  std::vector<Poly> out;
  std::mt19937_64 rng(0x5eedULL);
  Poly h{0, 1};
  for (std::size_t d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, p, f, p);
    Poly g = gcd(sub(h, Poly{0, 1}, p), f, p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = make_monic(divmod(f, g, p).first, p);
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

Matrix<ModRing> companion(const Poly& f, const ModRing& ring) {
  const std::size_t d = degree(f);
  Matrix<ModRing> C(ring, d, d);
  for (std::size_t i = 1; i < d; ++i) C(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) C(i, d - 1) = ring.neg(f[i] % ring.modulus().value());
  return C;
}

std::vector<std::vector<u64>> left_kernel(const Matrix<ModRing>& A) {
  const u64 p = A.ring().modulus().value();
  // Row-reduce A^T; its null space is the left kernel of A.
  const std::size_t rows = A.cols(), cols = A.rows();
  std::vector<std::vector<u64>> M(rows, std::vector<u64>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M[i][j] = A(j, i);
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    const u64 s = inv(M[r][c], p);
    for (u64& x : M[r]) x = mul_mod(x, s, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const u64 u = M[i][c];
      for (std::size_t k = 0; k < cols; ++k) M[i][k] = sub_mod(M[i][k], mul_mod(u, M[r][k], p), p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = (p - M[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace partcong::fp
