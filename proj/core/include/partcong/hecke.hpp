#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partcong/matrix.hpp"
#include "partcong/modforms.hpp"

namespace partcong {

// Iteration cap reached before the order was found; keeps the last power.
class CapExceeded : public Error {
 public:
  CapExceeded(u64 steps, Matrix<ModRing> partial)
      : Error("matrix order exceeds the cap of " + std::to_string(steps)), steps_(steps), partial_(std::move(partial)) {}

  u64 steps() const noexcept { return steps_; }
  const Matrix<ModRing>& partial_power() const noexcept { return partial_; }

 private:
  u64 steps_;
  Matrix<ModRing> partial_;
};

inline constexpr u64 kDefaultOrderCap = 10'000'000;

// ell^exponent in the ring; a negative exponent needs ell to be a unit.
template <class Ring>
typename Ring::Element ell_power(const Ring& ring, u64 ell, i64 exponent);

// d with ell^d T_{ell^2} integral: 1 when lambda = 0, else 0.
unsigned hecke_scale_exponent(const SpaceParams& params);

// Input slots needed for out_slots output slots: ell^2 (out_slots - 1) + delta + 1.
std::size_t hecke_input_slots(const SpaceParams& params, u64 ell, std::size_t out_slots);

// Slot n of the image:
//   a(ell^2 n + delta) + (12/ell) (((-1)^lambda (24n+r))/ell) ell^{lambda-1} a(n)
//     + ell^{2 lambda - 1} a((n - delta)/ell^2),
// the last term only when ell^2 | n - delta. Over ZZ with lambda = 0 this throws NotAUnit.
template <class Ring>
SlotSeries<Ring> T_ell2(const SlotSeries<Ring>& f, const SpaceParams& params, u64 ell, std::size_t out_slots);

// ell^d T_{ell^2} with d = hecke_scale_exponent(params); integral over ZZ.
template <class Ring>
SlotSeries<Ring> scaled_T_ell2(const SlotSeries<Ring>& f, const SpaceParams& params, u64 ell,
                               std::size_t out_slots);

// Rows express images: T f_i = sum_j A(i, j) f_j.
template <class Ring>
struct HeckeMatrix {
  Matrix<Ring> A;
  u64 ell = 0;
  SpaceParams params;
  std::size_t residual_depth = 0;
  // A is the matrix of ell^scale_exponent T_{ell^2}.
  unsigned scale_exponent = 0;
};

// Extracts A from the leading t slots and checks `residual_depth` further
// slots (default sturm_slots - t). SpanViolation on any mismatch. Over ZZ the
// scaled operator is used so the result stays integral.
template <class Ring>
HeckeMatrix<Ring> matrix_of_T(const SrsBasis<Ring>& basis, u64 ell,
                              std::optional<std::size_t> residual_depth = std::nullopt);

// Basis slots needed by matrix_of_T at the given residual depth.
std::size_t matrix_of_T_slots(const SpaceParams& params, std::size_t t, u64 ell,
                              std::optional<std::size_t> residual_depth = std::nullopt);

template <class Ring>
struct RecursionTriple {
  Matrix<Ring> A;
  Matrix<Ring> B;
  Matrix<Ring> C;
};

// (A_k; A_{k-1}) = X^k (I; 0), B_k = -ell^{lambda-1} (((-1)^{(r-1)/2} 12)/ell) A_{k-1},
// C_k = -ell^{r+2s-2} A_{k-1}.
template <class Ring>
RecursionTriple<Ring> recursion_matrices(const HeckeMatrix<Ring>& hm, u64 k);

// Triples for k = 1..count from the two-term recurrence A_{k+1} = A A_k - ell^e A_{k-1}.
template <class Ring>
std::vector<RecursionTriple<Ring>> recursion_sequence(const HeckeMatrix<Ring>& hm, u64 count);

struct RecursionReport {
  u64 k = 0;
  std::size_t slots_checked = 0;
  bool equal = false;
  std::optional<std::size_t> first_mismatch_form;
  std::optional<std::size_t> first_mismatch_slot;
};

// Checks f|U_{ell^2}^k = A_k f + B_k (f tensor (./ell)) + C_k f|V_{ell^2} on check_slots slots.
template <class Ring>
RecursionReport verify_recursion(const SrsBasis<Ring>& basis, u64 ell, u64 k, std::size_t check_slots);

// Basis slots needed by verify_recursion.
std::size_t verify_recursion_slots(const SpaceParams& params, std::size_t t, u64 ell, u64 k,
                                   std::size_t check_slots);

struct BlockMatrix {
  Matrix<ModRing> X;
  std::size_t t = 0;
  int e = 0;
};

// X = (A, -ell^e I; I, 0) with e = r + 2s - 2.
BlockMatrix block_X(const HeckeMatrix<ModRing>& hm);
BlockMatrix block_X(const Matrix<ModRing>& A, u64 ell, int e);

struct PglOrder {
  u64 order = 0;
  u64 scalar = 0;  // X^order = scalar * I
};

// Least k <= cap with X^k a unit scalar. CapExceeded otherwise.
PglOrder order_in_PGL(const Matrix<ModRing>& X, u64 cap = kDefaultOrderCap);
// Least k with X^k = I, derived from the PGL order and the scalar's order,
// then confirmed by one binary powering.
u64 order_in_GL(const Matrix<ModRing>& X, u64 cap = kDefaultOrderCap);

struct LocalFactor {
  std::vector<u64> poly;           // monic irreducible factor of the characteristic polynomial
  std::optional<u64> eigenvalue;   // set for linear factors
  u64 order = 0;                   // PGL order of the local block
};

struct EigenSplit {
  bool split = false;  // false: characteristic polynomial not squarefree, lcm is the full order
  std::vector<LocalFactor> factors;
  u64 lcm = 0;
};

// Prime modulus only.
EigenSplit eigen_split(const HeckeMatrix<ModRing>& hm, u64 cap = kDefaultOrderCap);

extern template struct HeckeMatrix<IntegerRing>;
extern template struct HeckeMatrix<ModRing>;

}  // namespace partcong
