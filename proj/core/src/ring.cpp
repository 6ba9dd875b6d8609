#include "partcong/ring.hpp"

#include <algorithm>
#include <cmath>

#include "partcong/detail/ntt.hpp"
#include "partcong/errors.hpp"

namespace partcong {

namespace {

using detail::CrtBasis;
using detail::ntt_prime;
using detail::primes_for_bits;

template <class T>
std::vector<std::size_t> nonzero_positions(std::span<const T> a, std::size_t limit) {
  std::vector<std::size_t> out;
  const std::size_t n = std::min(a.size(), limit);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) out.push_back(i);
  }
  return out;
}

double log2_size(std::size_t n) { return std::log2(static_cast<double>(std::max<std::size_t>(n, 2))); }

std::size_t transform_length(std::size_t la, std::size_t lb) {
  std::size_t n = 1;
  while (n < la + lb - 1) n <<= 1;
  return n;
}

// Accumulate rows into Acc without reduction until another row could overflow.
template <class Acc>
std::vector<u64> sparse_mod(std::span<const std::size_t> rows, std::span<const u64> a, std::span<const u64> b,
                            std::size_t out_len, u64 m) {
  const Acc top = ~Acc{0};
  const Acc sq = static_cast<Acc>(m - 1) * static_cast<Acc>(m - 1);
  const Acc budget = sq == 0 ? top : (top - m) / sq;
  std::vector<Acc> acc(out_len, 0);
  Acc used = 0;
  const std::size_t lb = std::min(b.size(), out_len);
  for (std::size_t i : rows) {
    if (used == budget) {
      for (Acc& x : acc) x %= m;
      used = 0;
    }
    const Acc ai = a[i];
    const std::size_t stop = std::min(lb, out_len - i);
    Acc* dst = acc.data() + i;
    for (std::size_t j = 0; j < stop; ++j) dst[j] += ai * b[j];
    ++used;
  }
  std::vector<u64> out(out_len);
  for (std::size_t k = 0; k < out_len; ++k) out[k] = static_cast<u64>(acc[k] % m);
  return out;
}

std::vector<u64> ntt_mod(std::span<const u64> a, std::span<const u64> b, std::size_t out_len, u64 m) {
  const std::size_t minlen = std::min({a.size(), b.size(), out_len});
  const double bits = log2_size(minlen) + 2.0 * std::log2(static_cast<double>(m));
  const std::size_t k = primes_for_bits(bits);
  const bool square = a.data() == b.data() && a.size() == b.size();
  std::vector<std::vector<u64>> res(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& prime = ntt_prime(i);
    const u64 p = prime.modulus();
    if (m <= p) {
      res[i] = prime.multiply(a, b, out_len);
    } else {
      std::vector<u64> ra(a.begin(), a.end()), rb;
      for (u64& x : ra) x %= p;
      if (!square) {
        rb.assign(b.begin(), b.end());
        for (u64& x : rb) x %= p;
      }
      res[i] = square ? prime.multiply(ra, ra, out_len) : prime.multiply(ra, rb, out_len);
    }
  }
  std::vector<u64> out(out_len);
  if (k == 1) {
    for (std::size_t t = 0; t < out_len; ++t) out[t] = res[0][t] % m;
    return out;
  }
  CrtBasis basis(k);
  const std::vector<u64> w = basis.weights_mod(m);
  std::vector<u64> residues(k), digits(k);
  for (std::size_t t = 0; t < out_len; ++t) {
    for (std::size_t i = 0; i < k; ++i) residues[i] = res[i][t];
    basis.digits(residues, digits);
    u64 x = 0;
    for (std::size_t i = 0; i < k; ++i) x = add_mod(x, mul_mod(digits[i] % m, w[i], m), m);
    out[t] = x;
  }
  return out;
}

std::size_t max_bits(std::span<const BigInt> a) {
  std::size_t bits = 0;
  for (const BigInt& x : a) {
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

std::vector<BigInt> ntt_exact(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t out_len,
                              std::size_t bits_a, std::size_t bits_b) {
  const std::size_t minlen = std::min({a.size(), b.size(), out_len});
  // |c_k| < minlen * 2^bits_a * 2^bits_b; the product of primes must cover twice that.
  const double bits = static_cast<double>(bits_a + bits_b) + log2_size(minlen) + 1.0;
  const std::size_t k = primes_for_bits(bits);
  const std::size_t la = std::min(a.size(), out_len), lb = std::min(b.size(), out_len);
  const bool square = a.data() == b.data() && a.size() == b.size();
  std::vector<std::vector<u64>> res(k);
  std::vector<u64> ra(la), rb(lb);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& prime = ntt_prime(i);
    const u64 p = prime.modulus();
    for (std::size_t t = 0; t < la; ++t) ra[t] = mpz_fdiv_ui(a[t].get_mpz_t(), p);
    if (square) {
      res[i] = prime.multiply(ra, ra, out_len);
    } else {
      for (std::size_t t = 0; t < lb; ++t) rb[t] = mpz_fdiv_ui(b[t].get_mpz_t(), p);
      res[i] = prime.multiply(ra, rb, out_len);
    }
  }
  CrtBasis basis(k);
  BigInt product = 1;
  for (std::size_t i = 0; i < k; ++i) product *= BigInt(static_cast<unsigned long>(basis.prime(i)));
  const BigInt half = product / 2;

  std::vector<BigInt> out(out_len);
  std::vector<u64> residues(k), digits(k);
  for (std::size_t t = 0; t < out_len; ++t) {
    for (std::size_t i = 0; i < k; ++i) residues[i] = res[i][t];
    basis.digits(residues, digits);
    BigInt& x = out[t];
    x = static_cast<unsigned long>(digits[k - 1]);
    for (std::size_t j = k - 1; j-- > 0;) {
      mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), basis.prime(j));
      mpz_add_ui(x.get_mpz_t(), x.get_mpz_t(), digits[j]);
    }
    if (x > half) x -= product;
  }
  return out;
}

}  // namespace

IntegerRing::Element IntegerRing::inverse(const Element& a) const {
  if (!is_unit(a)) throw NotAUnit(a.get_str() + " is not a unit in ZZ");
  return a;
}

std::vector<BigInt> IntegerRing::convolve(std::span<const BigInt> a, std::span<const BigInt> b,
                                          std::size_t out_len) const {
  std::vector<std::size_t> na = nonzero_positions(a, out_len);
  std::vector<std::size_t> nb = nonzero_positions(b, out_len);
  if (na.empty() || nb.empty() || out_len == 0) return std::vector<BigInt>(out_len, 0);
  if (nb.size() < na.size()) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  const std::size_t la = std::min(a.size(), out_len), lb = std::min(b.size(), out_len);
  const std::size_t bits_a = max_bits(a.first(la)), bits_b = max_bits(b.first(lb));
  const double limbs = (1.0 + bits_a / 64.0) * (1.0 + bits_b / 64.0);
  const double school = static_cast<double>(na.size()) * static_cast<double>(lb) * (4.0 + limbs);
  const std::size_t n = transform_length(la, lb);
  const double k = 1.0 + (bits_a + bits_b + log2_size(std::min(la, lb))) / 61.0;
  const double ntt = k * (8.0 * n * log2_size(n) + 30.0 * (la + lb)) + out_len * (k * k + 10.0 * k);
  if (school <= ntt) {
    std::vector<BigInt> out(out_len, 0);
    for (std::size_t i : na) {
      const std::size_t stop = std::min(lb, out_len - i);
      for (std::size_t j = 0; j < stop; ++j) {
        if (sgn(b[j]) != 0) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      }
    }
    return out;
  }
  return ntt_exact(a, b, out_len, bits_a, bits_b);
}

ModRing::Element ModRing::from_bigint(const BigInt& a) const { return mpz_fdiv_ui(a.get_mpz_t(), modulus_.value()); }

ModRing::Element ModRing::inverse(Element a) const { return partcong::inverse(Residue(a, modulus_)).value(); }

std::vector<u64> ModRing::convolve(std::span<const u64> a, std::span<const u64> b, std::size_t out_len) const {
  return convolve_mod(a, b, out_len, modulus_.value());
}

std::vector<u64> convolve_mod(std::span<const u64> a, std::span<const u64> b, std::size_t out_len, u64 m) {
  std::vector<std::size_t> na = nonzero_positions(a, out_len);
  std::vector<std::size_t> nb = nonzero_positions(b, out_len);
  if (na.empty() || nb.empty() || out_len == 0) return std::vector<u64>(out_len, 0);
  if (nb.size() < na.size()) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  const std::size_t la = std::min(a.size(), out_len), lb = std::min(b.size(), out_len);
  const double school = static_cast<double>(na.size()) * static_cast<double>(lb);
  const std::size_t n = transform_length(la, lb);
  const double k = 1.0 + (log2_size(std::min(la, lb)) + 2.0 * std::log2(static_cast<double>(m))) / 61.0;
  const double ntt = k * 9.0 * n * log2_size(n) + (k > 2.0 ? out_len * k * k * 4.0 : 0.0);
  if (school <= ntt) {
    if (m <= (u64{1} << 32)) return sparse_mod<u64>(na, a, b, out_len, m);
    return sparse_mod<u128>(na, a, b, out_len, m);
  }
  return ntt_mod(a.first(la), b.first(lb), out_len, m);
}

}  // namespace partcong
