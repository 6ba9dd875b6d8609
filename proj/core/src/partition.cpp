#include "partcong/partition.hpp"

#include <algorithm>
#include <limits>

namespace partcong {

namespace {

constexpr u64 kBlock = 4096;

// Blocked pass: contributions from earlier blocks are contiguous slices added
// in bulk; only sources inside the current block are summed one n at a time.
template <class T, class Acc>
std::vector<T> pentagonal_pass(u64 N, u64 m) {
  std::vector<T> p(N + 1);
  // Generalized pentagonal offsets with their sign, ascending.
  std::vector<u64> offsets;
  std::vector<bool> positive;
  for (u64 k = 1;; ++k) {
    const u64 g1 = k * (3 * k - 1) / 2;
    if (g1 > N) break;
    offsets.push_back(g1);
    positive.push_back(k & 1);
    if (g1 + k <= N) {
      offsets.push_back(g1 + k);
      positive.push_back(k & 1);
    }
  }
  std::vector<Acc> pos(kBlock), neg(kBlock);
  for (u64 base = 0; base <= N; base += kBlock) {
    const u64 len = std::min<u64>(kBlock, N + 1 - base);
    std::fill(pos.begin(), pos.begin() + len, 0);
    std::fill(neg.begin(), neg.begin() + len, 0);
    for (std::size_t q = 0; q < offsets.size(); ++q) {
      const u64 g = offsets[q];
      if (g >= base + len) break;
      const u64 lo = g > base ? g - base : 0;
      const u64 hi = std::min(len, g);
      Acc* acc = positive[q] ? pos.data() : neg.data();
      const T* src = p.data() + base - g;
      for (u64 j = lo; j < hi; ++j) acc[j] += src[j];
    }
    for (u64 j = 0; j < len; ++j) {
      const u64 n = base + j;
      if (n == 0) {
        p[0] = static_cast<T>(1 % m);
        continue;
      }
      Acc a = pos[j], b = neg[j];
      for (std::size_t q = 0; q < offsets.size() && offsets[q] <= j; ++q) (positive[q] ? a : b) += p[n - offsets[q]];
      const u64 x = static_cast<u64>(a % m), y = static_cast<u64>(b % m);
      p[n] = static_cast<T>(x >= y ? x - y : x + (m - y));
    }
  }
  return p;
}

u64 pow_u128_saturating(u64 base, u64 e) {
  u128 out = 1;
  for (u64 k = 0; k < e; ++k) {
    out *= base;
    if (out > std::numeric_limits<u64>::max()) return std::numeric_limits<u64>::max();
  }
  return static_cast<u64>(out);
}

void require_F_params(u64 m, unsigned j) {
  if (m < 5 || !is_prime(m)) throw InvalidArgument("F_{m,j} needs a prime m >= 5");
  if (j == 0) throw InvalidArgument("F_{m,j} needs j >= 1");
}

// Largest k with F_argument(m, j, k) <= budget, or nothing.
std::optional<u64> last_slot_within(u64 m, unsigned j, u64 budget) {
  const u64 mj = pow_u128_saturating(m, j);
  const u128 top = static_cast<u128>(budget) * 24 - 1;
  const u128 n_max = top / mj;
  const u64 n0 = F_base_residue(m, j);
  if (n_max < n0) return std::nullopt;
  return static_cast<u64>((n_max - n0) / 24);
}

FSlotSeries build_F(const PartitionTable& table, u64 m, unsigned j, std::size_t slots) {
  const u64 n0 = F_base_residue(m, j);
  if (slots > 0 && !table.covers(F_argument(m, j, slots - 1))) {
    throw InsufficientPrecision("partition table for F_{m,j}", F_argument(m, j, slots - 1) + 1,
                                table.max_index() + 1);
  }
  const u64 mj = pow_u128_saturating(m, j);
  std::vector<u64> coeffs(slots);
  for (std::size_t k = 0; k < slots; ++k) coeffs[k] = table[(mj * (24 * k + n0) + 1) / 24];
  const ModRing ring(table.modulus());
  return {m, j, n0, SlotSeries<ModRing>(static_cast<int>(n0), Series<ModRing>(ring, std::move(coeffs), 0)), false};
}

}  // namespace

PartitionTable::PartitionTable(Modulus modulus, std::vector<u32> narrow)
    : modulus_(modulus), size_(narrow.size()), narrow_(std::move(narrow)) {}

PartitionTable::PartitionTable(Modulus modulus, std::vector<u64> wide)
    : modulus_(modulus), size_(wide.size()), wide_(std::move(wide)) {}

u64 PartitionTable::operator[](u64 n) const {
  if (n >= size_) throw InsufficientPrecision("partition table", n + 1, size_);
  return narrow_.empty() ? wide_[n] : narrow_[n];
}

PartitionTable partition_mod(u64 N, const Modulus& modulus) {
  const u64 m = modulus.value();
  if (m <= (u64{1} << 32)) {
    // Each summand is below 2^33 and there are fewer than 2^20 of them for any table that fits in memory.
    if (m <= std::numeric_limits<u32>::max()) return PartitionTable(modulus, pentagonal_pass<u32, u64>(N, m));
    return PartitionTable(modulus, pentagonal_pass<u64, u64>(N, m));
  }
  return PartitionTable(modulus, pentagonal_pass<u64, u128>(N, m));
}

u64 F_base_residue(u64 m, unsigned j) {
  const u64 mj = pow_mod(m % 24, j, 24);
  for (u64 n0 = 1; n0 < 24; ++n0)
    if ((mj * n0) % 24 == 23) return n0;
  throw InvalidArgument("m must be coprime to 6");
}

u64 F_argument(u64 m, unsigned j, u64 k) {
  const u64 mj = pow_u128_saturating(m, j);
  const u128 num = static_cast<u128>(mj) * (24 * static_cast<u128>(k) + F_base_residue(m, j)) + 1;
  const u128 arg = num / 24;
  return arg > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max() : static_cast<u64>(arg);
}

FSlotSeries F_series(const PartitionTable& table, u64 m, unsigned j, std::size_t slots) {
  require_F_params(m, j);
  return build_F(table, m, j, slots);
}

FSlotSeries F_series(u64 m, unsigned j, std::size_t slots, const Modulus& modulus, u64 budget) {
  require_F_params(m, j);
  if (slots == 0) return build_F(partition_mod(0, modulus), m, j, 0);
  const u64 top = F_argument(m, j, slots - 1);
  if (top > budget) {
    throw OverflowBudget("F_{" + std::to_string(m) + "," + std::to_string(j) + "} needs p(" + std::to_string(top) +
                         "), above the budget " + std::to_string(budget));
  }
  return build_F(partition_mod(top, modulus), m, j, slots);
}

FSlotSeries F_series_within_budget(u64 m, unsigned j, std::size_t requested, const Modulus& modulus, u64 budget) {
  require_F_params(m, j);
  const auto last = last_slot_within(m, j, budget);
  if (!last) throw OverflowBudget("budget " + std::to_string(budget) + " does not reach the first slot");
  const std::size_t slots = static_cast<std::size_t>(std::min<u64>(requested, *last + 1));
  FSlotSeries out = F_series(m, j, slots, modulus, budget);
  out.truncated = slots < requested;
  return out;
}

MatchResult match_to_basis(const FSlotSeries& F, const SrsBasis<ModRing>& basis, std::size_t depth) {
  const std::size_t t = basis.dimension();
  if (basis.params().r != F.series.r()) throw InvalidArgument("basis residue class differs from the series");
  if (!(basis.ring() == F.series.ring())) throw RingMismatch("basis and series have different moduli");
  if (depth < t) throw InvalidArgument("match depth must be at least the dimension");
  if (F.slots() < depth) throw InsufficientPrecision("series for matching", depth, F.slots());
  if (basis.precision() < depth) throw InsufficientPrecision("basis for matching", depth, basis.precision());
  const ModRing& ring = basis.ring();

  MatchResult out;
  out.coefficients.resize(t);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = j + 1; k < t; ++k) {
      if (!ring.is_zero(basis.form(k)[j])) throw InvalidArgument("basis is not triangular in its leading slots");
    }
    u64 v = F.series[j];
    for (std::size_t k = 0; k < j; ++k) v = ring.sub(v, ring.mul(out.coefficients[k], basis.form(k)[j]));
    out.coefficients[j] = ring.mul(v, ring.inverse(basis.form(j)[j]));
  }
  for (std::size_t n = t; n < depth; ++n) {
    u64 v = 0;
    for (std::size_t k = 0; k < t; ++k) v = ring.add(v, ring.mul(out.coefficients[k], basis.form(k)[n]));
    if (v != F.series[n]) throw MatchFailure(n);
  }
  out.verified_depth = depth;
  return out;
}

bool check_FUm_consistency(u64 m, unsigned j, std::size_t slots, const Modulus& modulus, u64 budget) {
  require_F_params(m, j);
  if (slots == 0) return true;
  const u64 n0 = F_base_residue(m, j), n0_next = F_base_residue(m, j + 1);
  const u64 slots_j = (m * (24 * (slots - 1) + n0_next) - n0) / 24 + 1;
  const u64 top = std::max(F_argument(m, j, slots_j - 1), F_argument(m, j + 1, slots - 1));
  if (top > budget) throw OverflowBudget("F_{m,j}|U_m check needs p(" + std::to_string(top) + ")");
  const PartitionTable table = partition_mod(top, modulus);
  const FSlotSeries F = build_F(table, m, j, slots_j);
  const FSlotSeries G = build_F(table, m, j + 1, slots);
  for (std::size_t k = 0; k < slots; ++k) {
    const u64 n = m * (24 * k + n0_next);
    if ((n - n0) % 24 != 0) return false;
    if (F.series[(n - n0) / 24] != G.series[k]) return false;
  }
  return true;
}

std::optional<std::string> admissibility_failure(u64 m, unsigned j, u64 ell, u64 e, u64 n, bool require_m_coprime) {
  const u64 lhs = pow_mod(m % 24, j, 24) * pow_mod(ell % 24, e, 24) % 24 * (n % 24) % 24;
  if (lhs != 23) return "m^j ell^e n is not -1 mod 24";
  if (n % ell == 0) return "ell divides n";
  if (require_m_coprime && n % m == 0) return "m divides n";
  return std::nullopt;
}

std::vector<u64> admissible_n(u64 m, unsigned j, u64 ell, u64 e, std::size_t count, bool require_m_coprime) {
  const u64 unit = pow_mod(m % 24, j, 24) * pow_mod(ell % 24, e, 24) % 24;
  if (gcd(unit, 24) != 1) throw InvalidArgument("m and ell must be coprime to 6");
  // Units mod 24 square to 1, so n = -unit.
  std::vector<u64> out;
  for (u64 n = 24 - unit; out.size() < count; n += 24) {
    if (!admissibility_failure(m, j, ell, e, n, require_m_coprime)) out.push_back(n);
  }
  return out;
}

std::string to_string(SpotStatus status) {
  switch (status) {
    case SpotStatus::Pass:
      return "pass";
    case SpotStatus::Fail:
      return "fail";
    case SpotStatus::Infeasible:
      return "infeasible";
  }
  return "infeasible";
}

std::vector<SpotCheck> spot_check_congruence(const SpotCheckRequest& req, const PartitionTable* table) {
  const Modulus modulus = Modulus::prime_power(req.m, req.i);
  BigInt scale, ell_e;
  mpz_ui_pow_ui(scale.get_mpz_t(), req.m, req.j);
  mpz_ui_pow_ui(ell_e.get_mpz_t(), req.ell, req.e);
  scale *= ell_e;

  std::vector<SpotCheck> out;
  u64 top = 0;
  for (u64 n : req.n_list) {
    if (auto why = admissibility_failure(req.m, req.j, req.ell, req.e, n, req.require_m_coprime)) {
      throw InadmissibleN("n = " + std::to_string(n) + ": " + *why);
    }
    SpotCheck sc;
    sc.n = n;
    sc.argument = (scale * BigInt(static_cast<unsigned long>(n)) + 1) / 24;
    if (sc.argument <= BigInt(static_cast<unsigned long>(req.budget))) {
      top = std::max<u64>(top, sc.argument.get_ui());
      sc.status = SpotStatus::Fail;
    }
    out.push_back(std::move(sc));
  }

  std::optional<PartitionTable> own;
  const bool any_feasible =
      std::any_of(out.begin(), out.end(), [](const SpotCheck& s) { return s.status != SpotStatus::Infeasible; });
  if (any_feasible && !(table && table->modulus() == modulus && table->covers(top))) {
    own.emplace(partition_mod(top, modulus));
    table = &*own;
  }
  for (SpotCheck& sc : out) {
    if (sc.status == SpotStatus::Infeasible) continue;
    sc.residue = (*table)[sc.argument.get_ui()];
    sc.status = *sc.residue == 0 ? SpotStatus::Pass : SpotStatus::Fail;
  }
  return out;
}

}  // namespace partcong
