#pragma once

// Brute-force reference computations. Nothing here calls into the library.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// p(0..N) mod M by summing over the largest part.
inline std::vector<u64> partitions(u64 N, u64 M) {
  std::vector<u64> p(N + 1, 0);
  p[0] = 1 % M;
  for (u64 part = 1; part <= N; ++part)
    for (u64 n = part; n <= N; ++n) p[n] = (p[n] + p[n - part]) % M;
  return p;
}

// Truncated product of (1 - q^n) for n >= 1, expanded one factor at a time.
inline std::vector<mpz_class> euler_product(std::size_t P) {
  std::vector<mpz_class> c(P, 0);
  c[0] = 1;
  for (std::size_t n = 1; n < P; ++n)
    for (std::size_t k = P; k-- > n;) c[k] -= c[k - n];
  return c;
}

inline std::vector<mpz_class> mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, std::size_t P) {
  std::vector<mpz_class> c(P, 0);
  for (std::size_t i = 0; i < a.size() && i < P; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < P; ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline std::vector<mpz_class> power(const std::vector<mpz_class>& a, unsigned e, std::size_t P) {
  std::vector<mpz_class> out(P, 0);
  out[0] = 1;
  for (unsigned k = 0; k < e; ++k) out = mul(out, a, P);
  return out;
}

// sigma_{k-1} Eisenstein series normalized to constant term 1.
inline std::vector<mpz_class> eisenstein(int k, std::size_t P) {
  const long scale = k == 4 ? 240 : -504;
  std::vector<mpz_class> e(P, 0);
  e[0] = 1;
  for (std::size_t n = 1; n < P; ++n) {
    mpz_class sigma = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), d, k - 1);
      sigma += t;
    }
    e[n] = scale * sigma;
  }
  return e;
}

// Legendre symbol by listing squares.
inline int legendre(i64 a, i64 p) {
  const i64 r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (i64 x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

using Mat = std::vector<std::vector<u64>>;

inline Mat mat_mul(const Mat& a, const Mat& b, u64 M) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % M;
  return c;
}

inline bool is_unit_scalar(const Mat& a, u64 M) {
  const u64 c = a[0][0];
  u64 x = c, y = M;
  while (y) {
    const u64 t = x % y;
    x = y;
    y = t;
  }
  if (x != 1) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j ? c : 0)) return false;
  return true;
}

// Least k with X^k a unit scalar; 0 when none up to cap. Entries must be below 2^32.
inline u64 pgl_order(const Mat& X, u64 M, u64 cap) {
  Mat Y = X;
  for (u64 k = 1; k <= cap; ++k) {
    if (is_unit_scalar(Y, M)) return k;
    Y = mat_mul(Y, X, M);
  }
  return 0;
}

inline bool is_generalized_pentagonal(u64 g) {
  // g = k(3k - 1)/2 for some integer k iff 24 g + 1 is a square s^2 with s = 5 mod 6 or s = 1 mod 6.
  const u64 d = 24 * g + 1;
  u64 s = static_cast<u64>(std::sqrt(static_cast<long double>(d)));
  while (s * s > d) --s;
  while ((s + 1) * (s + 1) <= d) ++s;
  return s * s == d;
}

// Sign of x^g in prod (1 - x^n) at a generalized pentagonal g.
inline int pentagonal_sign(u64 g) {
  const u64 s = static_cast<u64>(std::llround(std::sqrt(static_cast<long double>(24 * g + 1))));
  const u64 k = s % 6 == 5 ? (s + 1) / 6 : (s - 1) / 6;
  return k % 2 == 0 ? 1 : -1;
}

// Coefficient of x^K in prod (1 - x^n)^19 mod 5, from
// eta^19 = eta^15 eta^3 eta = V_5(eta^3) eta^3 eta mod 5 and the sparse
// Jacobi and pentagonal expansions.
inline u64 eta19_mod5(u64 K) {
  i64 total = 0;
  for (u64 c = 0; 5 * c * (c + 1) / 2 <= K; ++c) {
    const u64 rest_c = K - 5 * c * (c + 1) / 2;
    const i64 wc = (c % 2 ? -1 : 1) * static_cast<i64>((2 * c + 1) % 5);
    if (wc == 0) continue;
    for (u64 a = 0; a * (a + 1) / 2 <= rest_c; ++a) {
      const u64 g = rest_c - a * (a + 1) / 2;
      const i64 wa = (a % 2 ? -1 : 1) * static_cast<i64>((2 * a + 1) % 5);
      if (wa == 0 || !is_generalized_pentagonal(g)) continue;
      total += wc * wa * pentagonal_sign(g);
    }
  }
  return static_cast<u64>(((total % 5) + 5) % 5);
}

}  // namespace oracle
