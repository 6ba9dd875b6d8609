#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "partcong/arith.hpp"

namespace partcong {

using BigInt = mpz_class;

// Exact rational integers.
class IntegerRing {
 public:
  using Element = BigInt;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(i64 a) const { return BigInt(static_cast<long>(a)); }
  Element from_bigint(const BigInt& a) const { return a; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_unit(const Element& a) const { return a == 1 || a == -1; }
  // Throws NotAUnit unless a = +-1.
  Element inverse(const Element& a) const;

  // c[k] = sum_{i+j=k} a[i] b[j] for k < out_len.
  std::vector<Element> convolve(std::span<const Element> a, std::span<const Element> b, std::size_t out_len) const;

  std::string name() const { return "ZZ"; }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

// Z/M with canonical word representatives.
class ModRing {
 public:
  using Element = u64;

  explicit ModRing(const Modulus& modulus) : modulus_(modulus) {}

  const Modulus& modulus() const noexcept { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(i64 a) const { return modulus_.reduce(a); }
  Element from_bigint(const BigInt& a) const;

  Element add(Element a, Element b) const { return modulus_.add(a, b); }
  Element sub(Element a, Element b) const { return modulus_.sub(a, b); }
  Element mul(Element a, Element b) const { return modulus_.mul(a, b); }
  Element neg(Element a) const { return modulus_.neg(a); }
  bool is_zero(Element a) const { return a == 0; }
  bool is_unit(Element a) const { return gcd(a, modulus_.value()) == 1; }
  Element inverse(Element a) const;

  std::vector<Element> convolve(std::span<const Element> a, std::span<const Element> b, std::size_t out_len) const;

  std::string name() const { return "ZZ/" + std::to_string(modulus_.value()); }
  friend bool operator==(const ModRing& a, const ModRing& b) { return a.modulus_ == b.modulus_; }

 private:
  Modulus modulus_;
};

// Word-level truncated product mod m, dispatching between a sparse kernel,
// lazy schoolbook accumulation and multi-prime transforms.
std::vector<u64> convolve_mod(std::span<const u64> a, std::span<const u64> b, std::size_t out_len, u64 m);

}  // namespace partcong
