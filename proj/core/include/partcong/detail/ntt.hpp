#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "partcong/arith.hpp"

namespace partcong::detail {

// Prime p = c * 2^k + 1 < 2^62 with Montgomery arithmetic for number
// theoretic transforms of length up to 2^kMaxLog.
class NttPrime {
 public:
  static constexpr unsigned kMaxLog = 26;

  explicit NttPrime(u64 p);

  u64 modulus() const noexcept { return p_; }
  double log2() const noexcept { return log2_; }

  // Cyclic-free product of a and b truncated to out_len terms. Inputs must be
  // reduced mod p. Passing the same span twice squares with one transform.
  std::vector<u64> multiply(std::span<const u64> a, std::span<const u64> b, std::size_t out_len) const;

 private:
  u64 to_mont(u64 a) const { return redc(static_cast<u128>(a) * r2_); }
  u64 from_mont(u64 a) const { return redc(a); }
  u64 mont_mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
  u64 redc(u128 t) const {
    u64 m = static_cast<u64>(t) * n_prime_;
    u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }
  void forward(std::vector<u64>& a) const;
  void inverse(std::vector<u64>& a) const;

  u64 p_;
  u64 n_prime_;  // -p^{-1} mod 2^64
  u64 r2_;       // 2^128 mod p
  u64 mont_one_;
  std::vector<u64> roots_;      // roots_[k]: primitive 2^k-th root, Montgomery form
  std::vector<u64> inv_roots_;
  double log2_;
};

// The i-th transform prime, generated on first use (thread safe).
const NttPrime& ntt_prime(std::size_t index);

// Mixed-radix Garner reconstruction over the first `count` transform primes.
class CrtBasis {
 public:
  explicit CrtBasis(std::size_t count);

  std::size_t size() const noexcept { return primes_.size(); }
  u64 prime(std::size_t i) const { return primes_[i]; }
  double log2_product() const noexcept { return log2_product_; }

  // Mixed-radix digits of the unique x in [0, prod p) with x = residues[i] mod p_i.
  void digits(std::span<const u64> residues, std::span<u64> out) const;
  // Weights (p_0...p_{j-1}) mod m, so x mod m = sum digits[j] * weights[j].
  std::vector<u64> weights_mod(u64 m) const;

 private:
  std::vector<u64> primes_;
  std::vector<std::vector<u64>> prefix_mod_;  // prefix_mod_[i][j] = p_0...p_{j-1} mod p_i
  std::vector<u64> inv_prefix_;               // (p_0...p_{i-1})^{-1} mod p_i
  double log2_product_ = 0.0;
};

// Number of transform primes whose product exceeds 2^bits.
std::size_t primes_for_bits(double bits);

}  // namespace partcong::detail
