#include "partcong/arith.hpp"

#include <array>
#include <utility>
#include <vector>

#include "partcong/errors.hpp"

namespace partcong {

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

bool trial_division_prime(u64 p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (u64 d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kSmall) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> inverse_mod(u64 a, u64 m) {
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

u64 reduce_signed(i64 a, u64 m) {
  i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

Modulus::Modulus(u64 value) : value_(value) {
  if (value < 2) throw InvalidArgument("modulus must be at least 2");
  if (value > kMaxValue) throw InvalidArgument("modulus must be below 2^62");
  if (partcong::is_prime(value)) hint_ = PrimePowerHint{value, 1};
}

Modulus Modulus::prime_power(u64 prime, unsigned exponent) {
  if (exponent == 0) throw InvalidArgument("prime power exponent must be positive");
  if (!trial_division_prime(prime)) throw InvalidArgument(std::to_string(prime) + " is not prime");
  Modulus m(checked_pow(prime, exponent));
  m.hint_ = PrimePowerHint{prime, exponent};
  return m;
}

Residue::Residue(u64 value, const Modulus& modulus) : value_(value % modulus.value()), modulus_(modulus) {}

Residue Residue::from_signed(i64 value, const Modulus& modulus) { return Residue(modulus.reduce(value), modulus); }

bool Residue::is_unit() const { return gcd(value_, modulus_.value()) == 1; }

Residue Residue::operator+(const Residue& o) const {
  if (!(modulus_ == o.modulus_)) throw RingMismatch("residues with different moduli");
  return Residue(modulus_.add(value_, o.value_), modulus_);
}

Residue Residue::operator-(const Residue& o) const {
  if (!(modulus_ == o.modulus_)) throw RingMismatch("residues with different moduli");
  return Residue(modulus_.sub(value_, o.value_), modulus_);
}

Residue Residue::operator*(const Residue& o) const {
  if (!(modulus_ == o.modulus_)) throw RingMismatch("residues with different moduli");
  return Residue(modulus_.mul(value_, o.value_), modulus_);
}

Residue Residue::operator-() const { return Residue(modulus_.neg(value_), modulus_); }

int kronecker(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) throw InvalidArgument("kronecker symbol needs an odd positive lower argument");
  u64 un = static_cast<u64>(n);
  u64 ua = reduce_signed(a, un);
  int result = 1;
  while (ua != 0) {
    while ((ua & 1) == 0) {
      ua >>= 1;
      u64 r = un & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(ua, un);
    if ((ua & 3) == 3 && (un & 3) == 3) result = -result;
    ua %= un;
  }
  return un == 1 ? result : 0;
}

Residue pow_mod(const Residue& base, u64 exp) {
  return Residue(pow_mod(base.value(), exp, base.modulus().value()), base.modulus());
}

Residue inverse(const Residue& a) {
  auto inv = inverse_mod(a.value(), a.modulus().value());
  if (!inv) {
    throw NotAUnit(std::to_string(a.value()) + " is not invertible modulo " + std::to_string(a.modulus().value()));
  }
  return Residue(*inv, a.modulus());
}

u64 multiplicative_order(u64 a, const Modulus& modulus) {
  const u64 m = modulus.value();
  a %= m;
  if (gcd(a, m) != 1) throw NotAUnit("multiplicative order of a non-unit");
  if (const auto& hint = modulus.hint()) {
    // |(Z/p^i)^*| = p^(i-1)(p-1); strip prime factors of the group order.
    u64 order = (m / hint->prime) * (hint->prime - 1);
    std::vector<u64> primes = prime_factors(hint->prime - 1);
    if (hint->exponent > 1) primes.push_back(hint->prime);
    for (u64 q : primes) {
      while (order % q == 0 && pow_mod(a, order / q, m) == 1) order /= q;
    }
    return order;
  }
  u64 x = a;
  for (u64 k = 1; k <= m; ++k) {
    if (x == 1) return k;
    x = mul_mod(x, a, m);
  }
  throw Error("multiplicative order search did not terminate");
}

u64 checked_pow(u64 base, unsigned exp) {
  u128 result = 1;
  for (unsigned k = 0; k < exp; ++k) {
    result *= base;
    if (result > Modulus::kMaxValue) throw OverflowBudget("power exceeds the machine word budget");
  }
  return static_cast<u64>(result);
}

}  // namespace partcong
