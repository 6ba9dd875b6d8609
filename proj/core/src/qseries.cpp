#include "partcong/qseries.hpp"

#include <algorithm>
#include <type_traits>

#include "partcong/errors.hpp"

namespace partcong {

template <class Ring>
Series<Ring>::Series(Ring ring, std::vector<Element> coefficients, std::size_t valuation)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients)), valuation_(valuation) {}

template <class Ring>
Series<Ring> Series<Ring>::zero(Ring ring, std::size_t absolute_precision) {
  std::vector<Element> c(absolute_precision, ring.zero());
  return Series(std::move(ring), std::move(c), 0);
}

template <class Ring>
Series<Ring> Series<Ring>::one(Ring ring, std::size_t precision) {
  std::vector<Element> c(precision, ring.zero());
  if (precision > 0) c[0] = ring.one();
  return Series(std::move(ring), std::move(c), 0);
}

template <class Ring>
Series<Ring> Series<Ring>::from_terms(Ring ring, const std::vector<std::pair<std::size_t, Element>>& terms,
                                      std::size_t precision) {
  std::vector<Element> c(precision, ring.zero());
  for (const auto& [k, value] : terms) {
    if (k < precision) c[k] = ring.add(c[k], value);
  }
  return Series(std::move(ring), std::move(c), 0);
}

template <class Ring>
void Series<Ring>::check_ring(const Series& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("series over " + ring_.name() + " and " + o.ring_.name());
}

template <class Ring>
typename Series<Ring>::Element Series<Ring>::operator[](std::size_t n) const {
  if (n < valuation_) return ring_.zero();
  if (n >= absolute_precision()) {
    throw InsufficientPrecision("coefficient beyond the known terms", n + 1, absolute_precision());
  }
  return coefficients_[n - valuation_];
}

template <class Ring>
Series<Ring> Series<Ring>::normalize() const {
  std::size_t z = 0;
  while (z < coefficients_.size() && ring_.is_zero(coefficients_[z])) ++z;
  return Series(ring_, std::vector<Element>(coefficients_.begin() + z, coefficients_.end()), valuation_ + z);
}

template <class Ring>
Series<Ring> Series<Ring>::expand_to_valuation(std::size_t valuation) const {
  if (valuation > valuation_) throw InvalidArgument("expand_to_valuation cannot raise the valuation");
  std::vector<Element> c(valuation_ - valuation, ring_.zero());
  c.insert(c.end(), coefficients_.begin(), coefficients_.end());
  return Series(ring_, std::move(c), valuation);
}

template <class Ring>
Series<Ring> Series<Ring>::truncate(std::size_t absolute_precision) const {
  if (absolute_precision <= valuation_) return Series(ring_, {}, absolute_precision);
  const std::size_t keep = std::min(coefficients_.size(), absolute_precision - valuation_);
  return Series(ring_, std::vector<Element>(coefficients_.begin(), coefficients_.begin() + keep), valuation_);
}

template <class Ring>
Series<Ring> Series<Ring>::operator+(const Series& o) const {
  check_ring(o);
  const std::size_t abs = std::min(absolute_precision(), o.absolute_precision());
  const std::size_t v = std::min({valuation_, o.valuation_, abs});
  std::vector<Element> c(abs - v, ring_.zero());
  for (std::size_t n = std::max(v, valuation_); n < abs; ++n) c[n - v] = coefficients_[n - valuation_];
  for (std::size_t n = std::max(v, o.valuation_); n < abs; ++n) {
    c[n - v] = ring_.add(c[n - v], o.coefficients_[n - o.valuation_]);
  }
  return Series(ring_, std::move(c), v);
}

template <class Ring>
Series<Ring> Series<Ring>::operator-() const {
  std::vector<Element> c(coefficients_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = ring_.neg(coefficients_[j]);
  return Series(ring_, std::move(c), valuation_);
}

template <class Ring>
Series<Ring> Series<Ring>::operator-(const Series& o) const {
  return *this + (-o);
}

template <class Ring>
Series<Ring> Series<Ring>::operator*(const Series& o) const {
  check_ring(o);
  const std::size_t p = std::min(precision(), o.precision());
  return Series(ring_, ring_.convolve(coefficients_, o.coefficients_, p), valuation_ + o.valuation_);
}

template <class Ring>
Series<Ring> Series<Ring>::scale(const Element& c) const {
  std::vector<Element> out(coefficients_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = ring_.mul(coefficients_[j], c);
  return Series(ring_, std::move(out), valuation_);
}

template <class Ring>
Series<Ring> Series<Ring>::pow(u64 e) const {
  Series result = one(ring_, precision());
  if (e == 0) return result;
  Series base = *this;
  bool first = true;
  while (true) {
    if (e & 1) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

template <class Ring>
Series<Ring> Series<Ring>::inverse() const {
  if (valuation_ != 0) throw NonzeroValuation("inverse needs valuation 0");
  const std::size_t P = precision();
  if (P == 0) return *this;
  if (!ring_.is_unit(coefficients_[0])) throw NotAUnit("constant term is not a unit");
  std::vector<Element> g{ring_.inverse(coefficients_[0])};
  std::size_t cur = 1;
  std::span<const Element> a(coefficients_);
  while (cur < P) {
    const std::size_t next = std::min(2 * cur, P);
    // g <- g - g (a g - 1), exact modulo q^next.
    std::vector<Element> err = ring_.convolve(a.first(next), g, next);
    err[0] = ring_.sub(err[0], ring_.one());
    std::vector<Element> corr = ring_.convolve(g, err, next);
    g.resize(next, ring_.zero());
    for (std::size_t k = 0; k < next; ++k) g[k] = ring_.sub(g[k], corr[k]);
    cur = next;
  }
  return Series(ring_, std::move(g), 0);
}

template <class Ring>
Series<Ring> Series<Ring>::U(std::size_t N) const {
  if (N == 0) throw InvalidArgument("U_N needs N >= 1");
  const std::size_t v = (valuation_ + N - 1) / N;
  const std::size_t abs = (absolute_precision() + N - 1) / N;
  std::vector<Element> c;
  if (abs > v) {
    c.resize(abs - v);
    for (std::size_t k = v; k < abs; ++k) c[k - v] = coefficients_[k * N - valuation_];
  }
  return Series(ring_, std::move(c), std::min(v, abs));
}

template <class Ring>
Series<Ring> Series<Ring>::V(std::size_t N) const {
  if (N == 0) throw InvalidArgument("V_N needs N >= 1");
  std::vector<Element> c(coefficients_.size() * N, ring_.zero());
  for (std::size_t j = 0; j < coefficients_.size(); ++j) c[j * N] = coefficients_[j];
  return Series(ring_, std::move(c), valuation_ * N);
}

template <class Ring>
Series<Ring> Series<Ring>::twist(u64 ell) const {
  if (ell < 3 || !is_prime(ell)) throw InvalidArgument("twist needs an odd prime");
  std::vector<Element> c(coefficients_.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const int chi = kronecker(static_cast<i64>((valuation_ + j) % ell), static_cast<i64>(ell));
    c[j] = chi == 0 ? ring_.zero() : chi > 0 ? coefficients_[j] : ring_.neg(coefficients_[j]);
  }
  return Series(ring_, std::move(c), valuation_);
}

template <class Ring>
Series<Ring> Series<Ring>::frobenius_pow(u64 p) const {
  if constexpr (std::is_same_v<Ring, ModRing>) {
    if (ring_.modulus().value() != p || !is_prime(p)) {
      throw InvalidArgument("frobenius_pow needs coefficients in the prime field F_p");
    }
    return V(p);
  } else {
    throw InvalidArgument("frobenius_pow needs coefficients in the prime field F_p");
  }
}

template <class Ring>
bool Series<Ring>::agrees_with(const Series& o) const {
  check_ring(o);
  const std::size_t abs = std::min(absolute_precision(), o.absolute_precision());
  for (std::size_t n = std::min(valuation_, o.valuation_); n < abs; ++n) {
    if ((*this)[n] != o[n]) return false;
  }
  return true;
}

Series<ModRing> reduce(const Series<IntegerRing>& a, const Modulus& modulus) {
  ModRing ring(modulus);
  std::vector<u64> c(a.precision());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = ring.from_bigint(a.coefficients()[j]);
  return Series<ModRing>(ring, std::move(c), a.valuation());
}

void require_slot_prime(u64 ell) {
  if (ell < 5 || !is_prime(ell)) {
    throw InvalidArgument("slot maps need a prime ell >= 5, got " + std::to_string(ell));
  }
}

template <class Ring>
SlotSeries<Ring>::SlotSeries(int r, Series<Ring> slots) : r_(r), slots_(std::move(slots)) {
  if (r <= 0 || r >= 24 || r % 2 == 0) throw InvalidArgument("slot residue r must be odd in (0, 24)");
}

template <class Ring>
u64 SlotSeries<Ring>::delta(int r, u64 ell) {
  return static_cast<u64>(r) * (ell * ell - 1) / 24;
}

template <class Ring>
SlotSeries<Ring> SlotSeries<Ring>::slot_U(u64 ell) const {
  require_slot_prime(ell);
  const u64 q = ell * ell, d = delta(r_, ell);
  const std::size_t abs = precision();
  const std::size_t out_len = abs > d ? (abs - d + q - 1) / q : 0;
  std::vector<Element> c(out_len);
  for (std::size_t n = 0; n < out_len; ++n) c[n] = slots_[q * n + d];
  return SlotSeries(r_, Series<Ring>(ring(), std::move(c), 0));
}

template <class Ring>
SlotSeries<Ring> SlotSeries<Ring>::slot_V(u64 ell) const {
  require_slot_prime(ell);
  const u64 q = ell * ell, d = delta(r_, ell);
  std::vector<Element> c(q * precision() + d, ring().zero());
  const auto& src = slots_.coefficients();
  for (std::size_t j = 0; j < src.size(); ++j) c[q * (slots_.valuation() + j) + d] = src[j];
  return SlotSeries(r_, Series<Ring>(ring(), std::move(c), 0));
}

template <class Ring>
SlotSeries<Ring> SlotSeries<Ring>::slot_twist(u64 ell) const {
  require_slot_prime(ell);
  const auto& src = slots_.coefficients();
  const Ring& R = ring();
  std::vector<Element> c(src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const u64 n = slots_.valuation() + j;
    const int chi = kronecker(static_cast<i64>((24 * n + r_) % ell), static_cast<i64>(ell));
    c[j] = chi == 0 ? R.zero() : chi > 0 ? src[j] : R.neg(src[j]);
  }
  return SlotSeries(r_, Series<Ring>(R, std::move(c), slots_.valuation()));
}

template <class Ring>
Series<Ring> SlotSeries<Ring>::to_q_series() const {
  std::vector<Element> c(24 * precision() + r_, ring().zero());
  const auto& src = slots_.coefficients();
  for (std::size_t j = 0; j < src.size(); ++j) c[24 * (slots_.valuation() + j) + r_] = src[j];
  return Series<Ring>(ring(), std::move(c), 0);
}

SlotSeries<ModRing> reduce(const SlotSeries<IntegerRing>& a, const Modulus& modulus) {
  return SlotSeries<ModRing>(a.r(), reduce(a.slots(), modulus));
}

template class Series<IntegerRing>;
template class Series<ModRing>;
template class SlotSeries<IntegerRing>;
template class SlotSeries<ModRing>;

}  // namespace partcong
