#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace partcong {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

// Raw word helpers; callers guarantee 0 <= a, b < m.
inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 pow_mod(u64 base, u64 exp, u64 m);
std::optional<u64> inverse_mod(u64 a, u64 m);
u64 reduce_signed(i64 a, u64 m);

struct PrimePowerHint {
  u64 prime;
  unsigned exponent;
};

// A modulus M >= 2 that fits a machine word. Products use 128-bit
// intermediates; values are capped below 2^62 so the transform primes
// used for fast multiplication always dominate a single residue.
class Modulus {
 public:
  static constexpr u64 kMaxValue = (u64{1} << 62) - 1;

  // A prime value gets the hint (value, 1).
  explicit Modulus(u64 value);
  // M = p^i, with p checked for primality by trial division.
  static Modulus prime_power(u64 prime, unsigned exponent);

  u64 value() const noexcept { return value_; }
  const std::optional<PrimePowerHint>& hint() const noexcept { return hint_; }
  bool is_prime() const noexcept { return hint_ && hint_->exponent == 1; }

  u64 reduce(i64 a) const { return reduce_signed(a, value_); }
  u64 add(u64 a, u64 b) const { return add_mod(a, b, value_); }
  u64 sub(u64 a, u64 b) const { return sub_mod(a, b, value_); }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, value_); }
  u64 neg(u64 a) const { return a == 0 ? 0 : value_ - a; }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.value_ == b.value_; }

 private:
  u64 value_;
  std::optional<PrimePowerHint> hint_;
};

// Canonically reduced element of Z/M.
class Residue {
 public:
  Residue(u64 value, const Modulus& modulus);
  static Residue from_signed(i64 value, const Modulus& modulus);

  u64 value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }
  bool is_unit() const;

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.value_; }

 private:
  u64 value_;
  Modulus modulus_;
};

// Kronecker-Jacobi symbol (a/n) for odd n >= 1.
int kronecker(i64 a, i64 n);

Residue pow_mod(const Residue& base, u64 exp);
// Throws NotAUnit when gcd(a, M) > 1.
Residue inverse(const Residue& a);

// Least k >= 1 with a^k = 1 in (Z/M)^*. a must be a unit.
u64 multiplicative_order(u64 a, const Modulus& modulus);

// Checked power p^e; throws OverflowBudget when the result exceeds the word.
u64 checked_pow(u64 base, unsigned exp);

}  // namespace partcong
