#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "partcong/arith.hpp"
#include "partcong/errors.hpp"

using namespace partcong;

TEST_SUITE("arith") {

TEST_CASE("kronecker fixed values") {
  CHECK(kronecker(15, 7) == 1);
  CHECK(kronecker(0, 9) == 0);
  CHECK(kronecker(12, 5) == -1);
  CHECK(kronecker(12, 7) == -1);
  CHECK(kronecker(12, 11) == 1);
  CHECK(kronecker(12, 13) == 1);
  CHECK(kronecker(-1, 7) == -1);
  CHECK(kronecker(5, 1) == 1);
}

TEST_CASE("kronecker rejects even or nonpositive n") {
  CHECK_THROWS_AS(kronecker(3, 8), InvalidArgument);
  CHECK_THROWS_AS(kronecker(3, 0), InvalidArgument);
  CHECK_THROWS_AS(kronecker(3, -5), InvalidArgument);
}

TEST_CASE("kronecker matches brute-force squares at primes") {
  for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    for (i64 a = -60; a <= 60; ++a) CHECK(kronecker(a, p) == oracle::legendre(a, p));
}

TEST_CASE("kronecker is multiplicative in the top argument") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> top(-10'000, 10'000);
  std::uniform_int_distribution<i64> bottom(0, 5'000);
  for (int trial = 0; trial < 2000; ++trial) {
    const i64 a = top(rng), b = top(rng), n = 2 * bottom(rng) + 1;
    CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
  }
}

TEST_CASE("kronecker vanishes exactly on shared factors") {
  for (i64 n = 1; n < 200; n += 2)
    for (i64 a = 0; a < 200; ++a) CHECK((kronecker(a, n) == 0) == (gcd(a, n) > 1));
}

TEST_CASE("Euler criterion below 100") {
  for (u64 p = 3; p < 100; ++p) {
    if (!is_prime(p)) continue;
    for (u64 a = 1; a < 3 * p; ++a) {
      if (a % p == 0) continue;
      const u64 euler = pow_mod(a % p, (p - 1) / 2, p);
      const int k = kronecker(static_cast<i64>(a), static_cast<i64>(p));
      CHECK(euler == (k == 1 ? 1 : p - 1));
    }
  }
}

TEST_CASE("pow_mod fixed values") {
  const Modulus m13(13), m37(37), m169(169);
  CHECK(pow_mod(Residue(5, m13), 9).value() == 5);
  CHECK(pow_mod(Residue(5, m37), 33).value() == 8);
  CHECK(pow_mod(Residue(7, m169), 0).value() == 1);
}

TEST_CASE("pow_mod agrees with repeated multiplication") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const u64 M = 2 + rng() % ((u64{1} << 61) - 2);
    const Modulus mod(M);
    const Residue b(rng() % M, mod);
    Residue acc(1 % M, mod);
    for (u64 e = 0; e <= 64; ++e) {
      CHECK(pow_mod(b, e) == acc);
      acc = acc * b;
    }
  }
}

TEST_CASE("inverse") {
  const Modulus m169(169);
  CHECK(inverse(Residue(24, m169)).value() == 162);
  CHECK((Residue(24, m169) * Residue(162, m169)).value() == 1);
  CHECK(inverse(Residue(1, Modulus(1000))).value() == 1);
  CHECK_THROWS_AS(inverse(Residue(13, m169)), NotAUnit);
  CHECK_THROWS_AS(inverse(Residue(0, m169)), NotAUnit);
}

TEST_CASE("modulus construction") {
  CHECK_THROWS_AS(Modulus(1), InvalidArgument);
  CHECK_THROWS_AS(Modulus(0), InvalidArgument);
  const Modulus m = Modulus::prime_power(13, 2);
  CHECK(m.value() == 169);
  CHECK(!m.is_prime());
  CHECK(Modulus::prime_power(37, 1).is_prime());
  CHECK_THROWS_AS(Modulus::prime_power(15, 1), InvalidArgument);
}

TEST_CASE("residues are canonical") {
  const Modulus m(10);
  CHECK(Residue(23, m).value() == 3);
  CHECK(Residue::from_signed(-3, m).value() == 7);
  CHECK((-Residue(0, m)).value() == 0);
  CHECK((Residue(4, m) - Residue(9, m)).value() == 5);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, Modulus(13)) == 12);
  CHECK(multiplicative_order(3, Modulus(13)) == 3);
  CHECK(multiplicative_order(1, Modulus(169)) == 1);
  CHECK(multiplicative_order(2, Modulus(169)) == 156);
}

}  // TEST_SUITE
