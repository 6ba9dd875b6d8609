#pragma once

#include <cstddef>
#include <vector>

#include "partcong/arith.hpp"
#include "partcong/ring.hpp"

namespace partcong {

// sum_{j<P} c[j] q^{v+j} + O(q^{v+P}); P = coefficients().size().
//
// Precision rules (relative precision P, absolute precision v + P):
//   add      valuation min(v1, v2), absolute precision min(v1+P1, v2+P2)
//   mul      valuation v1 + v2, relative precision min(P1, P2)
//   inverse  relative precision preserved
//   U_N      valuation ceil(v/N), absolute precision ceil((v+P)/N)
//   V_N      valuation N v, relative precision N P
template <class Ring>
class Series {
 public:
  using Element = typename Ring::Element;

  Series(Ring ring, std::vector<Element> coefficients, std::size_t valuation = 0);

  static Series zero(Ring ring, std::size_t absolute_precision);
  static Series one(Ring ring, std::size_t precision);
  // Sum of coefficients[k] q^k for k < precision from a sparse list of (exponent, value).
  static Series from_terms(Ring ring, const std::vector<std::pair<std::size_t, Element>>& terms,
                           std::size_t precision);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t valuation() const noexcept { return valuation_; }
  std::size_t precision() const noexcept { return coefficients_.size(); }
  std::size_t absolute_precision() const noexcept { return valuation_ + coefficients_.size(); }
  const std::vector<Element>& coefficients() const noexcept { return coefficients_; }

  // Coefficient of q^n; zero below the valuation; InsufficientPrecision at or beyond v + P.
  Element operator[](std::size_t n) const;

  // Strips leading stored zeros, raising the valuation.
  Series normalize() const;
  // Re-expresses with the given smaller valuation, padding with zeros.
  Series expand_to_valuation(std::size_t valuation) const;
  // Keeps exponents below the absolute bound.
  Series truncate(std::size_t absolute_precision) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series scale(const Element& c) const;

  Series pow(u64 e) const;
  // Requires v = 0 and a unit constant term.
  Series inverse() const;

  Series U(std::size_t N) const;
  Series V(std::size_t N) const;
  // Coefficient at exponent n multiplied by (n/ell).
  Series twist(u64 ell) const;
  // a^p computed as V_p(a); valid only over a ring of prime characteristic p.
  Series frobenius_pow(u64 p) const;

  // Equality of the represented series up to the smaller absolute precision.
  bool agrees_with(const Series& o) const;

 private:
  void check_ring(const Series& o) const;

  Ring ring_;
  std::vector<Element> coefficients_;
  std::size_t valuation_;
};

// Reduction Z -> Z/M of every stored coefficient.
Series<ModRing> reduce(const Series<IntegerRing>& a, const Modulus& modulus);

// Form supported on exponents 24n + r; slot n holds the coefficient of q^{24n+r}.
template <class Ring>
class SlotSeries {
 public:
  using Element = typename Ring::Element;

  SlotSeries(int r, Series<Ring> slots);

  int r() const noexcept { return r_; }
  const Series<Ring>& slots() const noexcept { return slots_; }
  const Ring& ring() const noexcept { return slots_.ring(); }
  std::size_t precision() const noexcept { return slots_.absolute_precision(); }
  Element operator[](std::size_t n) const { return slots_[n]; }

  // delta = r (ell^2 - 1) / 24: slot n of the ell^2-dilation sits at ell^2 n + delta.
  static u64 delta(int r, u64 ell);

  // out[n] = a[ell^2 n + delta]; precision ceil((P - delta) / ell^2).
  SlotSeries slot_U(u64 ell) const;
  // out[ell^2 n + delta] = a[n]; precision ell^2 P + delta.
  SlotSeries slot_V(u64 ell) const;
  // slot n multiplied by ((24n + r)/ell).
  SlotSeries slot_twist(u64 ell) const;

  // Expansion in q with the slot structure undone.
  Series<Ring> to_q_series() const;

 private:
  int r_;
  Series<Ring> slots_;
};

SlotSeries<ModRing> reduce(const SlotSeries<IntegerRing>& a, const Modulus& modulus);

// Rejects 2, 3 and non-primes.
void require_slot_prime(u64 ell);

extern template class Series<IntegerRing>;
extern template class Series<ModRing>;
extern template class SlotSeries<IntegerRing>;
extern template class SlotSeries<ModRing>;

}  // namespace partcong
