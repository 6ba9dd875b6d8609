#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "partcong/qseries.hpp"

namespace partcong {

// Space S_{r,s} = { eta(24z)^r f(24z) : f in M_s(SL2(Z)) }, half-integral weight s + r/2.
struct SpaceParams {
  int r = 0;
  int s = 0;
  u64 m = 0;       // 0 when the space is not tied to a modulus
  unsigned i = 0;  // power of m, 0 when untied

  // lambda = s + (r-1)/2, the integral part of the weight.
  int lambda() const { return s + (r - 1) / 2; }
  // e = r + 2s - 2 = 2 lambda - 1, the exponent of ell in the block matrix.
  int block_exponent() const { return r + 2 * s - 2; }

  // Validates r odd in (0, 24) and s even >= 0.
  static SpaceParams make(int r, int s);
  // S_{r_m, (m - r_m - 2)/2} with m = -r_m mod 24, for prime m >= 13.
  static SpaceParams chua(u64 m);
};

bool operator==(const SpaceParams& a, const SpaceParams& b);

// E4^a E6^b Delta^c.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;
  int weight() const { return 4 * a + 6 * b + 12 * c; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class BasisMode { Echelon, Paper, Custom };

std::string to_string(BasisMode mode);
BasisMode basis_mode_from_string(const std::string& s);

// Forms are rows of `transform` applied to eta^r * monomials.
struct BasisRecipe {
  SpaceParams params;
  BasisMode mode = BasisMode::Echelon;
  std::vector<Monomial> monomials;
  std::vector<std::vector<BigInt>> transform;

  std::size_t dimension() const { return transform.size(); }
  // Canonical text form: r, s, mode, monomial exponents and transform rows.
  std::string descriptor() const;
  // SHA-256 of descriptor(), lowercase hex.
  std::string hash() const;
};

// q-expansion of prod (1 - q^n), the eta product without its q^{1/24}.
template <class Ring>
Series<Ring> eta(const Ring& ring, std::size_t precision);
// prod (1 - q^n)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}.
template <class Ring>
Series<Ring> eta3(const Ring& ring, std::size_t precision);
// prod (1 - q^n)^e using eta and eta3 pieces.
template <class Ring>
Series<Ring> eta_power(const Ring& ring, unsigned e, std::size_t precision);
// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
template <class Ring>
Series<Ring> eisenstein(const Ring& ring, int k, std::size_t precision);
// Delta = q prod (1 - q^n)^24, stored densely from q^0.
template <class Ring>
Series<Ring> delta(const Ring& ring, std::size_t precision);

// dim M_s(SL2(Z)) for even s >= 0.
int dim_Ms(int s);
// floor(m/12) - floor(m/24), the dimension of the Chua space for prime m >= 13.
int dim_srs(u64 m);
// Verification depth in slots: floor((96 s + 47 r)/24) + 1, at least dim_Ms(s).
std::size_t sturm_slots(const SpaceParams& params);

// Monomials Delta^j W (E4^3)^{d-1-j}, j = 0..d-1, with W fixed by s mod 12.
std::vector<Monomial> standard_monomials(int s);

BasisRecipe echelon_recipe(const SpaceParams& params);
BasisRecipe paper_recipe(const SpaceParams& params);
BasisRecipe recipe_for_mode(const SpaceParams& params, BasisMode mode);
// Arbitrary integral combinations of the standard monomials.
BasisRecipe custom_recipe(const SpaceParams& params, std::vector<std::vector<BigInt>> transform);

template <class Ring>
class SrsBasis {
 public:
  SrsBasis(BasisRecipe recipe, std::vector<SlotSeries<Ring>> forms);

  const BasisRecipe& recipe() const noexcept { return recipe_; }
  const SpaceParams& params() const noexcept { return recipe_.params; }
  std::size_t dimension() const noexcept { return forms_.size(); }
  std::size_t precision() const;
  const std::vector<SlotSeries<Ring>>& forms() const noexcept { return forms_; }
  const SlotSeries<Ring>& form(std::size_t i) const { return forms_.at(i); }
  const Ring& ring() const { return forms_.front().ring(); }

 private:
  BasisRecipe recipe_;
  std::vector<SlotSeries<Ring>> forms_;
};

// Builds the forms of a recipe to `slots` slots. InsufficientPrecision if slots < t.
template <class Ring>
SrsBasis<Ring> srs_basis(const Ring& ring, const BasisRecipe& recipe, std::size_t slots);

template <class Ring>
SrsBasis<Ring> srs_basis(const Ring& ring, const SpaceParams& params, std::size_t slots,
                         BasisMode mode = BasisMode::Echelon);

SrsBasis<ModRing> reduce(const SrsBasis<IntegerRing>& basis, const Modulus& modulus);

}  // namespace partcong
