#include "partcong/detail/ntt.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>

#include "partcong/errors.hpp"

namespace partcong::detail {

namespace {

std::vector<u64> odd_prime_factors(u64 n) {
  std::vector<u64> out;
  while (n % 2 == 0) n /= 2;
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 find_generator(u64 p) {
  std::vector<u64> qs = odd_prime_factors(p - 1);
  qs.push_back(2);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : qs) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

std::size_t ceil_pow2(std::size_t n) {
  std::size_t r = 1;
  while (r < n) r <<= 1;
  return r;
}

}  // namespace

NttPrime::NttPrime(u64 p) : p_(p), log2_(std::log2(static_cast<double>(p))) {
  if ((p - 1) % (u64{1} << kMaxLog) != 0 || !is_prime(p)) {
    throw InvalidArgument("not a transform prime");
  }
  u64 inv = p;
  for (int k = 0; k < 6; ++k) inv *= 2 - p * inv;
  n_prime_ = ~inv + 1;
  u64 r = static_cast<u64>((static_cast<u128>(1) << 64) % p);
  r2_ = mul_mod(r, r, p);
  mont_one_ = r;

  const u64 g = find_generator(p);
  roots_.resize(kMaxLog + 1);
  inv_roots_.resize(kMaxLog + 1);
  for (unsigned k = 0; k <= kMaxLog; ++k) {
    u64 w = pow_mod(g, (p - 1) >> k, p);
    roots_[k] = to_mont(w);
    inv_roots_[k] = to_mont(*inverse_mod(w, p));
  }
}

// Decimation in frequency; natural order in, bit-reversed order out.
void NttPrime::forward(std::vector<u64>& a) const {
  const std::size_t n = a.size();
  std::vector<u64> tw(n / 2 + 1);
  unsigned level = 0;
  while ((std::size_t{1} << level) < n) ++level;
  for (std::size_t len = n / 2; len >= 1; len >>= 1, --level) {
    tw[0] = mont_one_;
    for (std::size_t j = 1; j < len; ++j) tw[j] = mont_mul(tw[j - 1], roots_[level]);
    for (std::size_t i = 0; i < n; i += 2 * len) {
      u64* x = a.data() + i;
      u64* y = x + len;
      for (std::size_t j = 0; j < len; ++j) {
        u64 u = x[j], v = y[j];
        x[j] = add_mod(u, v, p_);
        y[j] = mont_mul(sub_mod(u, v, p_), tw[j]);
      }
    }
  }
}

// Decimation in time; bit-reversed order in, natural order out, scaled by 1/n.
void NttPrime::inverse(std::vector<u64>& a) const {
  const std::size_t n = a.size();
  std::vector<u64> tw(n / 2 + 1);
  unsigned level = 1;
  for (std::size_t len = 1; len < n; len <<= 1, ++level) {
    tw[0] = mont_one_;
    for (std::size_t j = 1; j < len; ++j) tw[j] = mont_mul(tw[j - 1], inv_roots_[level]);
    for (std::size_t i = 0; i < n; i += 2 * len) {
      u64* x = a.data() + i;
      u64* y = x + len;
      for (std::size_t j = 0; j < len; ++j) {
        u64 u = x[j], v = mont_mul(y[j], tw[j]);
        x[j] = add_mod(u, v, p_);
        y[j] = sub_mod(u, v, p_);
      }
    }
  }
  // Entries are in Montgomery form; multiplying by plain 1/n also leaves it.
  const u64 scale = *inverse_mod(n % p_, p_);
  for (u64& x : a) x = mont_mul(x, scale);
}

std::vector<u64> NttPrime::multiply(std::span<const u64> a, std::span<const u64> b, std::size_t out_len) const {
  const bool square = a.data() == b.data() && a.size() == b.size();
  a = a.first(std::min(a.size(), out_len));
  b = b.first(std::min(b.size(), out_len));
  if (a.empty() || b.empty() || out_len == 0) return std::vector<u64>(out_len, 0);
  const std::size_t full = a.size() + b.size() - 1;
  const std::size_t n = ceil_pow2(full);
  if (n > (std::size_t{1} << kMaxLog)) throw OverflowBudget("transform length exceeds 2^26");

  std::vector<u64> fa(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = to_mont(a[i]);
  forward(fa);
  if (square) {
    for (u64& x : fa) x = mont_mul(x, x);
  } else {
    std::vector<u64> fb(n, 0);
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = to_mont(b[i]);
    forward(fb);
    for (std::size_t i = 0; i < n; ++i) fa[i] = mont_mul(fa[i], fb[i]);
  }
  inverse(fa);
  fa.resize(std::min(full, out_len));
  fa.resize(out_len, 0);
  return fa;
}

const NttPrime& ntt_prime(std::size_t index) {
  static std::mutex mu;
  static std::deque<NttPrime> primes;
  static u64 next_c = ((u64{1} << 62) - 2) >> NttPrime::kMaxLog;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= index) {
    for (;; --next_c) {
      if (next_c == 0) throw OverflowBudget("ran out of transform primes");
      u64 p = (next_c << NttPrime::kMaxLog) + 1;
      if (is_prime(p)) {
        primes.emplace_back(p);
        --next_c;
        break;
      }
    }
  }
  return primes[index];
}

CrtBasis::CrtBasis(std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    primes_.push_back(ntt_prime(i).modulus());
    log2_product_ += ntt_prime(i).log2();
  }
  prefix_mod_.resize(count);
  inv_prefix_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const u64 p = primes_[i];
    prefix_mod_[i].resize(i + 1);
    u64 acc = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      prefix_mod_[i][j] = acc;
      if (j < i) acc = mul_mod(acc, primes_[j] % p, p);
    }
    inv_prefix_[i] = *inverse_mod(acc, p);
  }
}

void CrtBasis::digits(std::span<const u64> residues, std::span<u64> out) const {
  const std::size_t k = primes_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const u64 p = primes_[i];
    u64 partial = 0;
    for (std::size_t j = 0; j < i; ++j) {
      partial = add_mod(partial, mul_mod(out[j] % p, prefix_mod_[i][j], p), p);
    }
    out[i] = mul_mod(sub_mod(residues[i] % p, partial, p), inv_prefix_[i], p);
  }
}

std::vector<u64> CrtBasis::weights_mod(u64 m) const {
  std::vector<u64> w(primes_.size());
  u64 acc = 1 % m;
  for (std::size_t j = 0; j < primes_.size(); ++j) {
    w[j] = acc;
    acc = mul_mod(acc, primes_[j] % m, m);
  }
  return w;
}

std::size_t primes_for_bits(double bits) {
  std::size_t k = 0;
  double acc = 0.0;
  while (acc <= bits + 1.0) acc += ntt_prime(k++).log2();
  return k;
}

}  // namespace partcong::detail
