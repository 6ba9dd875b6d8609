#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "partcong/errors.hpp"
#include "partcong/modforms.hpp"

namespace partcong {

inline constexpr u64 kDefaultPartitionBudget = 100'000'000;

// p(0..N) mod M. Residues are stored in 32 bits when M allows.
class PartitionTable {
 public:
  PartitionTable(Modulus modulus, std::vector<u32> narrow);
  PartitionTable(Modulus modulus, std::vector<u64> wide);

  const Modulus& modulus() const noexcept { return modulus_; }
  // Largest stored index N.
  u64 max_index() const noexcept { return size_ - 1; }
  bool covers(u64 n) const noexcept { return n < size_; }
  // InsufficientPrecision beyond N.
  u64 operator[](u64 n) const;

 private:
  Modulus modulus_;
  u64 size_;
  std::vector<u32> narrow_;
  std::vector<u64> wide_;
};

// Pentagonal recurrence in one sequential pass, O(N^{3/2}) word additions.
PartitionTable partition_mod(u64 N, const Modulus& modulus);

// n0 in [1, 23] with m^j n0 = -1 mod 24.
u64 F_base_residue(u64 m, unsigned j);

// Slot k carries p((m^j (24k + n0) + 1)/24) mod M; the slot residue class is r = n0.
struct FSlotSeries {
  u64 m = 0;
  unsigned j = 0;
  u64 n0 = 0;
  SlotSeries<ModRing> series;
  // Set when the budget cut the requested slot count.
  bool truncated = false;

  Modulus modulus() const { return series.ring().modulus(); }
  std::size_t slots() const { return series.precision(); }
};

// Argument of p at slot k of F_{m,j}, saturating at 2^64 - 1.
u64 F_argument(u64 m, unsigned j, u64 k);

// Requires a table reaching the last slot's argument.
FSlotSeries F_series(const PartitionTable& table, u64 m, unsigned j, std::size_t slots);
// Builds its own table. OverflowBudget if the last argument exceeds the budget.
FSlotSeries F_series(u64 m, unsigned j, std::size_t slots, const Modulus& modulus,
                     u64 budget = kDefaultPartitionBudget);
// Largest slot count <= requested whose arguments fit the budget; sets `truncated` when cut.
FSlotSeries F_series_within_budget(u64 m, unsigned j, std::size_t requested, const Modulus& modulus,
                                   u64 budget = kDefaultPartitionBudget);

struct MatchResult {
  std::vector<u64> coefficients;  // F = sum_j c_j f_j on every verified slot
  std::size_t verified_depth = 0;
};

// Triangular solve on the first t slots, then every slot below depth is checked.
// MatchFailure at the first disagreeing slot.
MatchResult match_to_basis(const FSlotSeries& F, const SrsBasis<ModRing>& basis, std::size_t depth);

// F_{m,j}|U_m against F_{m,j+1} on `slots` slots.
bool check_FUm_consistency(u64 m, unsigned j, std::size_t slots, const Modulus& modulus,
                           u64 budget = kDefaultPartitionBudget);

// Empty when admissible, else the failed condition.
std::optional<std::string> admissibility_failure(u64 m, unsigned j, u64 ell, u64 e, u64 n, bool require_m_coprime);

// First `count` n with m^j ell^e n = -1 mod 24, ell not dividing n, and m not dividing n when required.
std::vector<u64> admissible_n(u64 m, unsigned j, u64 ell, u64 e, std::size_t count, bool require_m_coprime = true);

enum class SpotStatus { Pass, Fail, Infeasible };

std::string to_string(SpotStatus status);

struct SpotCheck {
  u64 n = 0;
  BigInt argument;   // (m^j ell^e n + 1)/24
  std::optional<u64> residue;  // p(argument) mod m^i when evaluated
  SpotStatus status = SpotStatus::Infeasible;
};

struct SpotCheckRequest {
  u64 m = 0;
  unsigned i = 1;  // congruence modulo m^i
  unsigned j = 1;
  u64 ell = 0;
  u64 e = 0;
  std::vector<u64> n_list;
  bool require_m_coprime = true;
  u64 budget = kDefaultPartitionBudget;
};

// p at the exact arguments mod m^i. InadmissibleN names the failed condition;
// arguments above the budget are reported Infeasible. A supplied table is used
// when it has the right modulus and covers the largest feasible argument.
std::vector<SpotCheck> spot_check_congruence(const SpotCheckRequest& request,
                                             const PartitionTable* table = nullptr);

}  // namespace partcong
