#include "partcong/modforms.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <type_traits>

#include "partcong/errors.hpp"

namespace partcong {

namespace {

template <class Ring>
typename Ring::Element from_u128(const Ring& ring, u128 v) {
  if constexpr (std::is_same_v<Ring, ModRing>) {
    return static_cast<u64>(v % ring.modulus().value());
  } else {
    BigInt hi(static_cast<unsigned long>(static_cast<u64>(v >> 64)));
    BigInt lo(static_cast<unsigned long>(static_cast<u64>(v)));
    return ring.from_bigint((hi << 64) + lo);
  }
}

// sigma_k(n) for n < precision.
std::vector<u128> divisor_sums(int k, std::size_t precision) {
  std::vector<u128> sigma(precision, 0);
  for (std::size_t d = 1; d < precision; ++d) {
    u128 dk = 1;
    for (int e = 0; e < k; ++e) dk *= d;
    for (std::size_t n = d; n < precision; n += d) sigma[n] += dk;
  }
  return sigma;
}

// Powers x^0..x^count of a series, built by repeated multiplication.
template <class Ring>
std::vector<Series<Ring>> power_table(const Series<Ring>& x, int count) {
  std::vector<Series<Ring>> out;
  out.push_back(Series<Ring>::one(x.ring(), x.precision()));
  for (int k = 1; k <= count; ++k) out.push_back(k == 1 ? x : out.back() * x);
  return out;
}

template <class Ring>
std::vector<Series<Ring>> monomial_series(const Ring& ring, const std::vector<Monomial>& monomials,
                                          std::size_t precision) {
  int max_a = 0, max_b = 0, max_c = 0;
  for (const Monomial& mono : monomials) {
    max_a = std::max(max_a, mono.a);
    max_b = std::max(max_b, mono.b);
    max_c = std::max(max_c, mono.c);
  }
  auto e4 = power_table(eisenstein(ring, 4, precision), max_a);
  auto e6 = power_table(eisenstein(ring, 6, precision), max_b);
  auto dl = power_table(delta(ring, precision), max_c);
  std::vector<Series<Ring>> out;
  for (const Monomial& mono : monomials) {
    Series<Ring> s = e4[mono.a];
    if (mono.b > 0) s = s * e6[mono.b];
    if (mono.c > 0) s = s * dl[mono.c];
    out.push_back(std::move(s));
  }
  return out;
}

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[k]};
  return os.str();
}

// Inverse of a unit upper-triangular integer matrix.
std::vector<std::vector<BigInt>> unit_upper_inverse(const std::vector<std::vector<BigInt>>& L) {
  const std::size_t t = L.size();
  std::vector<std::vector<BigInt>> T(t, std::vector<BigInt>(t, 0));
  for (std::size_t i = t; i-- > 0;) {
    T[i][i] = 1;
    // Row i of T satisfies sum_k T[i][k] L[k][j] = 0 for j > i.
    for (std::size_t j = i + 1; j < t; ++j) {
      BigInt acc = 0;
      for (std::size_t k = i; k < j; ++k) acc += T[i][k] * L[k][j];
      T[i][j] = -acc;
    }
  }
  return T;
}

}  // namespace

SpaceParams SpaceParams::make(int r, int s) {
  if (r <= 0 || r >= 24 || r % 2 == 0) throw InvalidArgument("eta exponent r must be odd in (0, 24)");
  if (s < 0 || s % 2 != 0) throw InvalidArgument("weight s must be even and non-negative");
  SpaceParams p;
  p.r = r;
  p.s = s;
  return p;
}

SpaceParams SpaceParams::chua(u64 m) {
  if (m < 13 || !is_prime(m)) throw InvalidArgument("the Chua space needs a prime m >= 13");
  const int r = static_cast<int>((24 - m % 24) % 24);
  SpaceParams p = make(r, static_cast<int>((m - r - 2) / 2));
  p.m = m;
  p.i = 1;
  return p;
}

bool operator==(const SpaceParams& a, const SpaceParams& b) {
  return a.r == b.r && a.s == b.s && a.m == b.m && a.i == b.i;
}

std::string to_string(BasisMode mode) {
  switch (mode) {
    case BasisMode::Echelon:
      return "echelon";
    case BasisMode::Paper:
      return "paper";
    case BasisMode::Custom:
      return "custom";
  }
  return "echelon";
}

BasisMode basis_mode_from_string(const std::string& s) {
  if (s == "echelon") return BasisMode::Echelon;
  if (s == "paper") return BasisMode::Paper;
  if (s == "custom") return BasisMode::Custom;
  throw InvalidArgument("unknown basis mode '" + s + "'");
}

std::string BasisRecipe::descriptor() const {
  std::ostringstream os;
  os << "r=" << params.r << ";s=" << params.s << ";mode=" << to_string(mode) << ";monomials=";
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    if (k) os << ',';
    os << monomials[k].a << '.' << monomials[k].b << '.' << monomials[k].c;
  }
  os << ";transform=";
  for (std::size_t i = 0; i < transform.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < transform[i].size(); ++j) {
      if (j) os << ',';
      os << transform[i][j].get_str();
    }
  }
  return os.str();
}

std::string BasisRecipe::hash() const { return sha256_hex(descriptor()); }

template <class Ring>
Series<Ring> eta(const Ring& ring, std::size_t precision) {
  std::vector<std::pair<std::size_t, typename Ring::Element>> terms{{0, ring.one()}};
  for (std::size_t k = 1; k * (3 * k - 1) / 2 < precision; ++k) {
    const auto sign = ring.from_int(k % 2 == 0 ? 1 : -1);
    terms.emplace_back(k * (3 * k - 1) / 2, sign);
    if (k * (3 * k + 1) / 2 < precision) terms.emplace_back(k * (3 * k + 1) / 2, sign);
  }
  return Series<Ring>::from_terms(ring, terms, precision);
}

template <class Ring>
Series<Ring> eta3(const Ring& ring, std::size_t precision) {
  std::vector<std::pair<std::size_t, typename Ring::Element>> terms;
  for (std::size_t k = 0; k * (k + 1) / 2 < precision; ++k) {
    const i64 c = static_cast<i64>(2 * k + 1);
    terms.emplace_back(k * (k + 1) / 2, ring.from_int(k % 2 == 0 ? c : -c));
  }
  return Series<Ring>::from_terms(ring, terms, precision);
}

template <class Ring>
Series<Ring> eta_power(const Ring& ring, unsigned e, std::size_t precision) {
  if constexpr (std::is_same_v<Ring, ModRing>) {
    // (sum c_n q^n)^p = sum c_n q^{pn} over F_p.
    const u64 p = ring.modulus().value();
    if (ring.modulus().is_prime() && e >= p) {
      const std::size_t inner_precision = (precision + p - 1) / p;
      Series<Ring> outer = eta_power(ring, static_cast<unsigned>(e / p), inner_precision).frobenius_pow(p);
      outer = outer.truncate(precision);
      if (e % p == 0) return outer;
      return outer * eta_power(ring, static_cast<unsigned>(e % p), precision);
    }
  }
  Series<Ring> result = Series<Ring>::one(ring, precision);
  if (e >= 3) result = eta3(ring, precision).pow(e / 3);
  if (e % 3 != 0) result = result * eta(ring, precision).pow(e % 3);
  return result;
}

template <class Ring>
Series<Ring> eisenstein(const Ring& ring, int k, std::size_t precision) {
  if (k != 4 && k != 6) throw InvalidArgument("eisenstein supports weights 4 and 6");
  const std::vector<u128> sigma = divisor_sums(k - 1, precision);
  const auto factor = ring.from_int(k == 4 ? 240 : -504);
  std::vector<typename Ring::Element> c(precision, ring.zero());
  if (precision > 0) c[0] = ring.one();
  for (std::size_t n = 1; n < precision; ++n) c[n] = ring.mul(factor, from_u128(ring, sigma[n]));
  return Series<Ring>(ring, std::move(c), 0);
}

template <class Ring>
Series<Ring> delta(const Ring& ring, std::size_t precision) {
  std::vector<typename Ring::Element> c(precision, ring.zero());
  if (precision > 1) {
    const Series<Ring> e24 = eta_power(ring, 24, precision - 1);
    for (std::size_t n = 1; n < precision; ++n) c[n] = e24.coefficients()[n - 1];
  }
  return Series<Ring>(ring, std::move(c), 0);
}

int dim_Ms(int s) {
  if (s < 0 || s % 2 != 0) throw InvalidArgument("dim_Ms needs an even non-negative weight");
  if (s == 2) return 0;
  if (s % 12 == 2) return s / 12;
  return s / 12 + 1;
}

int dim_srs(u64 m) {
  if (m < 13 || !is_prime(m)) throw InvalidArgument("dim_srs needs a prime m >= 13");
  return static_cast<int>(m / 12 - m / 24);
}

std::size_t sturm_slots(const SpaceParams& params) {
  const std::size_t bound = static_cast<std::size_t>(96 * params.s + 47 * params.r) / 24 + 1;
  return std::max<std::size_t>(bound, static_cast<std::size_t>(dim_Ms(params.s)));
}

std::vector<Monomial> standard_monomials(int s) {
  const int d = dim_Ms(s);
  Monomial w;
  switch (s % 12) {
    case 0:
      break;
    case 4:
      w.a = 1;
      break;
    case 6:
      w.b = 1;
      break;
    case 8:
      w.a = 2;
      break;
    case 10:
      w.a = 1;
      w.b = 1;
      break;
    case 2:
      w.a = 2;
      w.b = 1;
      break;
  }
  std::vector<Monomial> out;
  for (int j = 0; j < d; ++j) out.push_back(Monomial{w.a + 3 * (d - 1 - j), w.b, j});
  return out;
}

BasisRecipe paper_recipe(const SpaceParams& params) {
  BasisRecipe recipe;
  recipe.params = params;
  recipe.mode = BasisMode::Paper;
  recipe.monomials = standard_monomials(params.s);
  const std::size_t t = recipe.monomials.size();
  recipe.transform.assign(t, std::vector<BigInt>(t, 0));
  for (std::size_t i = 0; i < t; ++i) recipe.transform[i][i] = 1;
  return recipe;
}

BasisRecipe echelon_recipe(const SpaceParams& params) {
  BasisRecipe recipe = paper_recipe(params);
  recipe.mode = BasisMode::Echelon;
  const std::size_t t = recipe.monomials.size();
  if (t == 0) return recipe;
  IntegerRing Z;
  const Series<IntegerRing> h = eta_power(Z, static_cast<unsigned>(params.r), t);
  const auto monos = monomial_series(Z, recipe.monomials, t);
  std::vector<std::vector<BigInt>> L(t);
  for (std::size_t i = 0; i < t; ++i) L[i] = (h * monos[i]).coefficients();
  recipe.transform = unit_upper_inverse(L);
  return recipe;
}

BasisRecipe recipe_for_mode(const SpaceParams& params, BasisMode mode) {
  if (mode == BasisMode::Paper) return paper_recipe(params);
  if (mode == BasisMode::Echelon) return echelon_recipe(params);
  throw InvalidArgument("custom bases need an explicit transform");
}

BasisRecipe custom_recipe(const SpaceParams& params, std::vector<std::vector<BigInt>> transform) {
  BasisRecipe recipe = paper_recipe(params);
  recipe.mode = BasisMode::Custom;
  const std::size_t t = recipe.monomials.size();
  if (transform.size() != t) throw InvalidArgument("custom transform must have one row per monomial");
  for (const auto& row : transform) {
    if (row.size() != t) throw InvalidArgument("custom transform must be square");
  }
  recipe.transform = std::move(transform);
  return recipe;
}

template <class Ring>
SrsBasis<Ring>::SrsBasis(BasisRecipe recipe, std::vector<SlotSeries<Ring>> forms)
    : recipe_(std::move(recipe)), forms_(std::move(forms)) {}

template <class Ring>
std::size_t SrsBasis<Ring>::precision() const {
  std::size_t p = forms_.empty() ? 0 : forms_.front().precision();
  for (const auto& f : forms_) p = std::min(p, f.precision());
  return p;
}

template <class Ring>
SrsBasis<Ring> srs_basis(const Ring& ring, const BasisRecipe& recipe, std::size_t slots) {
  const std::size_t t = recipe.dimension();
  if (slots < t) throw InsufficientPrecision("basis precision below its dimension", t, slots);
  const Series<Ring> h = eta_power(ring, static_cast<unsigned>(recipe.params.r), slots);
  std::vector<Series<Ring>> pieces;
  for (auto& mono : monomial_series(ring, recipe.monomials, slots)) pieces.push_back(h * mono);
  std::vector<SlotSeries<Ring>> forms;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<typename Ring::Element> c(slots, ring.zero());
    for (std::size_t k = 0; k < t; ++k) {
      const BigInt& w = recipe.transform[i][k];
      if (sgn(w) == 0) continue;
      const auto wk = ring.from_bigint(w);
      const auto& src = pieces[k].coefficients();
      for (std::size_t n = 0; n < slots; ++n) c[n] = ring.add(c[n], ring.mul(wk, src[n]));
    }
    forms.emplace_back(recipe.params.r, Series<Ring>(ring, std::move(c), 0));
  }
  return SrsBasis<Ring>(recipe, std::move(forms));
}

template <class Ring>
SrsBasis<Ring> srs_basis(const Ring& ring, const SpaceParams& params, std::size_t slots, BasisMode mode) {
  return srs_basis(ring, recipe_for_mode(params, mode), slots);
}

SrsBasis<ModRing> reduce(const SrsBasis<IntegerRing>& basis, const Modulus& modulus) {
  std::vector<SlotSeries<ModRing>> forms;
  for (const auto& f : basis.forms()) forms.push_back(reduce(f, modulus));
  return SrsBasis<ModRing>(basis.recipe(), std::move(forms));
}

#define PARTCONG_INSTANTIATE(R)                                                                   \
  template Series<R> eta<R>(const R&, std::size_t);                                               \
  template Series<R> eta3<R>(const R&, std::size_t);                                              \
  template Series<R> eta_power<R>(const R&, unsigned, std::size_t);                               \
  template Series<R> eisenstein<R>(const R&, int, std::size_t);                                   \
  template Series<R> delta<R>(const R&, std::size_t);                                             \
  template class SrsBasis<R>;                                                                     \
  template SrsBasis<R> srs_basis<R>(const R&, const BasisRecipe&, std::size_t);                   \
  template SrsBasis<R> srs_basis<R>(const R&, const SpaceParams&, std::size_t, BasisMode);

PARTCONG_INSTANTIATE(IntegerRing)
PARTCONG_INSTANTIATE(ModRing)

#undef PARTCONG_INSTANTIATE

}  // namespace partcong
