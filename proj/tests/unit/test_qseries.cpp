#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "partcong/errors.hpp"
#include "partcong/modforms.hpp"
#include "partcong/qseries.hpp"

using namespace partcong;

namespace {

using ZSeries = Series<IntegerRing>;
using MSeries = Series<ModRing>;

ZSeries zseries(std::vector<long> c, std::size_t v = 0) {
  std::vector<BigInt> out;
  for (long x : c) out.emplace_back(x);
  return ZSeries(IntegerRing{}, out, v);
}

ZSeries random_zseries(std::mt19937_64& rng, std::size_t P, std::size_t v = 0) {
  std::vector<BigInt> c(P);
  for (auto& x : c) x = static_cast<long>(rng() % 2001) - 1000;
  return ZSeries(IntegerRing{}, c, v);
}

MSeries random_mseries(std::mt19937_64& rng, const ModRing& ring, std::size_t P) {
  std::vector<u64> c(P);
  for (auto& x : c) x = rng() % ring.modulus().value();
  return MSeries(ring, c);
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("geometric series inverse") {
  const ModRing ring(Modulus(101));
  std::vector<u64> one_minus_q(50, 0);
  one_minus_q[0] = 1;
  one_minus_q[1] = 100;
  const MSeries a(ring, one_minus_q);
  const MSeries inv = a.inverse();
  for (std::size_t n = 0; n < 50; ++n) CHECK(inv[n] == 1);
  const MSeries prod = a * inv;
  CHECK(prod.agrees_with(MSeries::one(ring, 50)));
}

TEST_CASE("pow of 1 + q") {
  const ZSeries p = zseries({1, 1, 0, 0, 0}).pow(2);
  CHECK(p.agrees_with(zseries({1, 2, 1, 0, 0})));
}

TEST_CASE("partition generating function times Euler product") {
  const std::size_t P = 2000;
  const auto p = oracle::partitions(P - 1, u64{1} << 40);
  const ModRing ring(Modulus(u64{1} << 40));
  const MSeries parts(ring, p);
  const MSeries prod = parts * eta(ring, P);
  CHECK(prod.agrees_with(MSeries::one(ring, P)));
}

TEST_CASE("inverse of the Euler product gives partition numbers") {
  const ZSeries e = eta(IntegerRing{}, 200);
  const ZSeries inv = e.inverse();
  const long first[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (std::size_t n = 0; n < 11; ++n) CHECK(inv[n] == first[n]);
  const auto p = oracle::partitions(199, u64{1} << 62);
  for (std::size_t n = 0; n < 200; ++n) CHECK(inv[n] == BigInt(static_cast<unsigned long>(p[n])));
}

TEST_CASE("inverse errors") {
  const ModRing z4(Modulus(4));
  CHECK_THROWS_AS(MSeries(z4, {2, 1}).inverse(), NotAUnit);
  CHECK_THROWS_AS(zseries({1, 1}, 1).inverse(), NonzeroValuation);
  CHECK_THROWS_AS(zseries({2, 1}).inverse(), NotAUnit);
}

TEST_CASE("ring mismatch") {
  const MSeries a(ModRing(Modulus(5)), {1, 2});
  const MSeries b(ModRing(Modulus(7)), {1, 2});
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(a * b, RingMismatch);
}

TEST_CASE("U and V fixed values") {
  CHECK(zseries({1, 1, 3, 1}).U(2).agrees_with(zseries({1, 3})));
  CHECK(zseries({1, 1, 3, 1}).U(2).absolute_precision() == 2);
  const ZSeries v = zseries({1, 1}).V(3);
  CHECK(v.agrees_with(zseries({1, 0, 0, 1, 0, 0})));
  CHECK(v.absolute_precision() == 6);
}

TEST_CASE("twist by the symbol mod 3") {
  const ZSeries all = zseries(std::vector<long>(30, 1));
  const ZSeries tw = all.twist(3);
  for (std::size_t n = 0; n < 30; ++n) CHECK(tw[n] == oracle::legendre(static_cast<i64>(n), 3));
  CHECK(tw[1] == 1);
  CHECK(tw[2] == -1);
  CHECK(tw[3] == 0);
  CHECK(tw[4] == 1);
  CHECK(tw[5] == -1);
}

TEST_CASE("U of a twisted slot-supported form vanishes") {
  // Supported on exponents 24n + 11, so the twist kills every multiple of 25.
  const ZSeries q = SlotSeries<IntegerRing>(11, eta_power(IntegerRing{}, 11, 300)).to_q_series();
  const ZSeries u = q.twist(5).U(25);
  for (std::size_t n = 0; n < u.absolute_precision(); ++n) CHECK(u[n] == 0);
}

TEST_CASE("slot shifts") {
  CHECK(SlotSeries<IntegerRing>::delta(11, 5) == 11);
  CHECK(SlotSeries<IntegerRing>::delta(23, 5) == 23);
  CHECK(SlotSeries<IntegerRing>::delta(1, 7) == 2);
  std::mt19937_64 rng(3);
  const SlotSeries<IntegerRing> f(11, random_zseries(rng, 40));
  CHECK(f.slot_U(5)[0] == f[11]);
  CHECK(f.slot_U(5)[1] == f[36]);
  const auto back = f.slot_V(5).slot_U(5);
  CHECK(back.slots().agrees_with(f.slots()));
  CHECK(back.precision() == f.precision());
  CHECK_THROWS_AS(f.slot_U(3), InvalidArgument);
  CHECK_THROWS_AS(f.slot_U(2), InvalidArgument);
  CHECK_THROWS_AS(SlotSeries<IntegerRing>(12, f.slots()), InvalidArgument);
}

TEST_CASE("slot maps agree with the q-expansion operators") {
  std::mt19937_64 rng(5);
  for (int r : {1, 11, 23}) {
    const SlotSeries<IntegerRing> f(r, random_zseries(rng, 120));
    for (u64 ell : {5, 7}) {
      const ZSeries u = f.slot_U(ell).to_q_series();
      const ZSeries direct = f.to_q_series().U(ell * ell);
      CHECK(u.agrees_with(direct));
      const ZSeries tw = f.slot_twist(ell).to_q_series();
      CHECK(tw.agrees_with(f.to_q_series().twist(ell)));
    }
  }
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const ZSeries a = random_zseries(rng, 60), b = random_zseries(rng, 50, 1), c = random_zseries(rng, 45, 2);
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    CHECK((a + b).agrees_with(b + a));
    CHECK((a * b).agrees_with(b * a));
    CHECK((a - a).agrees_with(ZSeries::zero(IntegerRing{}, 60)));
  }
}

TEST_CASE("precision bookkeeping") {
  const ZSeries a = zseries({1, 2, 3, 4}, 2);
  const ZSeries b = zseries({5, 6}, 1);
  CHECK((a + b).valuation() == 1);
  CHECK((a + b).absolute_precision() == 3);
  CHECK((a * b).valuation() == 3);
  CHECK((a * b).precision() == 2);
  CHECK(zseries({0, 0, 7, 1}).normalize().valuation() == 2);
  CHECK(a.expand_to_valuation(0)[2] == 1);
  CHECK_THROWS_AS(a[6], InsufficientPrecision);
  CHECK(a[0] == 0);
}

TEST_CASE("U after V is the identity, V after U projects") {
  std::mt19937_64 rng(19);
  for (std::size_t N : {2, 3, 5, 25}) {
    const ZSeries a = random_zseries(rng, 97);
    CHECK(a.V(N).U(N).agrees_with(a));
    const ZSeries proj = a.U(N).V(N);
    for (std::size_t n = 0; n < proj.absolute_precision(); ++n) CHECK(proj[n] == (n % N == 0 ? a[n] : BigInt(0)));
  }
}

TEST_CASE("twice twisted restricts to prime-to-ell exponents") {
  std::mt19937_64 rng(23);
  const ZSeries a = random_zseries(rng, 200);
  for (u64 ell : {3, 5, 7, 13}) {
    const ZSeries tt = a.twist(ell).twist(ell);
    for (std::size_t n = 0; n < 200; ++n) CHECK(tt[n] == (n % ell == 0 ? BigInt(0) : a[n]));
  }
}

TEST_CASE("reduction commutes with every operation") {
  std::mt19937_64 rng(29);
  const Modulus M(169);
  for (int trial = 0; trial < 10; ++trial) {
    const ZSeries a = random_zseries(rng, 80), b = random_zseries(rng, 70);
    std::vector<BigInt> uc = random_zseries(rng, 60).coefficients();
    uc[0] = 1;
    const ZSeries unit(IntegerRing{}, uc);
    CHECK(reduce(a + b, M).agrees_with(reduce(a, M) + reduce(b, M)));
    CHECK(reduce(a - b, M).agrees_with(reduce(a, M) - reduce(b, M)));
    CHECK(reduce(a * b, M).agrees_with(reduce(a, M) * reduce(b, M)));
    CHECK(reduce(a.pow(3), M).agrees_with(reduce(a, M).pow(3)));
    CHECK(reduce(unit.inverse(), M).agrees_with(reduce(unit, M).inverse()));
    CHECK(reduce(a.U(5), M).agrees_with(reduce(a, M).U(5)));
    CHECK(reduce(a.V(5), M).agrees_with(reduce(a, M).V(5)));
    CHECK(reduce(a.twist(7), M).agrees_with(reduce(a, M).twist(7)));
  }
}

TEST_CASE("fast multiplication matches schoolbook") {
  std::mt19937_64 rng(31);
  for (u64 M : {u64{5}, u64{169}, u64{1} << 31, (u64{1} << 62) - 57}) {
    const ModRing ring{Modulus(M)};
    for (std::size_t P : {3, 64, 700, 3000}) {
      const MSeries a = random_mseries(rng, ring, P), b = random_mseries(rng, ring, P);
      const MSeries c = a * b;
      for (std::size_t k = 0; k < P; k += P / 3 + 1) {
        u128 acc = 0;
        for (std::size_t i = 0; i <= k; ++i) acc = (acc + static_cast<u128>(a[i]) * b[k - i]) % M;
        CHECK(c[k] == static_cast<u64>(acc));
      }
    }
  }
}

TEST_CASE("Frobenius power matches repeated multiplication") {
  std::mt19937_64 rng(37);
  for (u64 p : {5, 7, 13}) {
    const ModRing ring{Modulus(p)};
    const MSeries a = random_mseries(rng, ring, 300);
    CHECK(a.frobenius_pow(p).agrees_with(a.pow(p)));
  }
}

}  // TEST_SUITE
