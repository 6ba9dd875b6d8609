#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partcong/certificate.hpp"
#include "partcong/hecke.hpp"
#include "partcong/partition.hpp"

namespace partcong {

struct AbWeight {
  u64 m = 0;
  unsigned i = 0;
  u64 beta = 0;          // 24 beta = 1 mod m^i, 1 <= beta < m^i
  int k = 0;             // weight k_{m,i}
  int eta_exponent = 0;  // (24 beta - 1)/m^i
};

AbWeight ab_weight(u64 m, unsigned i);

// S_{eta_exponent, k}; for i = 1 this is the Chua space of m.
SpaceParams certify_space(u64 m, unsigned i);

struct CertifyOptions {
  BasisMode mode = BasisMode::Echelon;
  std::optional<BasisRecipe> recipe;        // overrides mode
  u64 order_cap = kDefaultOrderCap;
  u64 partition_budget = kDefaultPartitionBudget;
  std::optional<std::size_t> precision_slots;  // verification depth, at least t
  std::vector<u64> n_list;                  // empty: first three admissible n
  bool spot_checks = true;
};

// Basis of the certification space mod m^i, deep enough for every listed ell.
class SpaceContext {
 public:
  SpaceContext(u64 m, unsigned i, const std::vector<u64>& ells, const CertifyOptions& options = {});

  u64 m() const noexcept { return m_; }
  unsigned i() const noexcept { return i_; }
  const SpaceParams& params() const noexcept { return basis_.params(); }
  const SrsBasis<ModRing>& basis() const noexcept { return basis_; }
  std::size_t depth() const noexcept { return depth_; }
  // Residual slots checked past t.
  std::size_t residual() const noexcept { return depth_ - basis_.dimension(); }

 private:
  u64 m_;
  unsigned i_;
  std::size_t depth_;
  SrsBasis<ModRing> basis_;
};

// m >= 13 prime through the Hecke pipeline; m = 5 through the k5 route.
// Spot checks run at j = i with exponent 2K - 1.
CongruenceCertificate certify(u64 m, unsigned i, u64 ell, const CertifyOptions& options = {},
                              const SpaceContext* context = nullptr, const PartitionTable* table = nullptr);

// Mod-5 eigenvalues of eta(24z)^19 and eta(24z)^23 for primes up to max_ell.
class K5Context {
 public:
  explicit K5Context(u64 max_ell);

  u64 max_ell() const noexcept { return max_ell_; }
  // (a, b): T_{ell^2} eigenvalues on S_{19,0} and S_{23,0} mod 5.
  std::pair<u64, u64> eigenvalues(u64 ell) const;

 private:
  u64 max_ell_;
  SrsBasis<ModRing> s19_;
  SrsBasis<ModRing> s23_;
};

// 5, 4, 4, 2 for ell = 1, 2, 3, 4 mod 5.
u64 k5_case_value(u64 ell);
// The case value, confirmed against the PGL(2, F_5) order of (a, -ell^17; 1, 0).
// MismatchWithTheorem when they differ.
u64 k5(u64 ell, const K5Context& context);
u64 k5(u64 ell);

enum class SporadicCase { None, OneModFive, TwoModFive, ThreeModFive };

std::string to_string(SporadicCase c);

struct SporadicResult {
  SporadicCase which = SporadicCase::None;
  int legendre = 0;        // ((-n)/ell)
  unsigned k_ell = 0;
  unsigned m_ell = 0;
  BigInt argument;         // (5^i ell^(2 k_ell) n + 1)/24, or ell^4 for the relation check
  std::optional<u64> residue;
  // Relation branch: ell = 1 mod 5, i odd, no case applies.
  std::optional<BigInt> base_argument;  // (5^i n + 1)/24
  std::optional<u64> base_residue;
  std::optional<u64> predicted;          // 3 (1 + ((-n)/ell)) p(base) mod 5^(i+1)
  // Empty when no case applies and no relation is available.
  std::optional<SpotStatus> status;
  bool applicable() const { return which != SporadicCase::None; }
  bool relation_checked() const { return base_argument.has_value(); }
};

// Residues are mod 5^(i+1). InadmissibleN when 5^i n != -1 mod 24 or ell | n.
SporadicResult sporadic_check(u64 ell, unsigned i, u64 n, u64 budget = kDefaultPartitionBudget);

struct PeriodResult {
  u64 m = 0;
  std::size_t t = 0;
  u64 preperiod = 0;  // N with A^(N+P) = A^N
  u64 period = 0;     // P
  int A_bound = 0;    // 2 dim M_s
  std::vector<std::vector<u64>> matrix;  // T_{m^2} mod m
};

// Eventual period of the powers of T_{m^2} mod m on the Chua space. CapExceeded past the cap.
PeriodResult period_m(u64 m, u64 cap = kDefaultOrderCap, BasisMode mode = BasisMode::Echelon);

}  // namespace partcong
