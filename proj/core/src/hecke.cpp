#include "partcong/hecke.hpp"

#include <type_traits>

#include "partcong/fp_linalg.hpp"

namespace partcong {

namespace {

template <class Ring>
typename Ring::Element signed_unit(const Ring& ring, const typename Ring::Element& x, int sign) {
  if (sign == 0) return ring.zero();
  return sign > 0 ? x : ring.neg(x);
}

template <class Ring>
SlotSeries<Ring> apply_T(const SlotSeries<Ring>& f, const SpaceParams& params, u64 ell, std::size_t out_slots,
                         unsigned d) {
  require_slot_prime(ell);
  if (f.r() != params.r) throw InvalidArgument("series residue class does not match the space");
  const Ring& ring = f.ring();
  const u64 q = ell * ell;
  const u64 delta = SlotSeries<Ring>::delta(params.r, ell);
  const std::size_t need = hecke_input_slots(params, ell, out_slots);
  if (f.precision() < need) throw InsufficientPrecision("Hecke operator input", need, f.precision());

  const i64 lambda = params.lambda();
  const auto c_first = ell_power(ring, ell, static_cast<i64>(d));
  const auto c_mid = ell_power(ring, ell, lambda - 1 + d);
  const auto c_last = ell_power(ring, ell, 2 * lambda - 1 + d);
  const int chi12 = kronecker(12, static_cast<i64>(ell));
  const i64 sign = lambda % 2 == 0 ? 1 : -1;

  std::vector<typename Ring::Element> out(out_slots, ring.zero());
  for (std::size_t n = 0; n < out_slots; ++n) {
    auto v = ring.mul(c_first, f[q * n + delta]);
    const i64 arg = sign * static_cast<i64>((24 * n + params.r) % ell);
    const int chi = chi12 * kronecker(arg, static_cast<i64>(ell));
    if (chi != 0) v = ring.add(v, signed_unit(ring, ring.mul(c_mid, f[n]), chi));
    if (n >= delta && (n - delta) % q == 0) v = ring.add(v, ring.mul(c_last, f[(n - delta) / q]));
    out[n] = v;
  }
  return SlotSeries<Ring>(params.r, Series<Ring>(ring, std::move(out), 0));
}

std::size_t default_depth(const SpaceParams& params, std::size_t t, std::optional<std::size_t> residual_depth) {
  if (residual_depth) return t + *residual_depth;
  return std::max(sturm_slots(params), t);
}

template <class Ring>
Matrix<Ring> block_matrix(const Matrix<Ring>& A, const typename Ring::Element& corner) {
  const std::size_t t = A.rows();
  Matrix<Ring> X(A.ring(), 2 * t, 2 * t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) X(i, j) = A(i, j);
    X(i, t + i) = corner;
    X(t + i, i) = A.ring().one();
  }
  return X;
}

}  // namespace

template <class Ring>
typename Ring::Element ell_power(const Ring& ring, u64 ell, i64 exponent) {
  if constexpr (std::is_same_v<Ring, ModRing>) {
    const u64 m = ring.modulus().value();
    const u64 pos = pow_mod(ell % m, static_cast<u64>(exponent < 0 ? -exponent : exponent), m);
    return exponent < 0 ? ring.inverse(pos) : pos;
  } else {
    if (exponent < 0) throw NotAUnit("negative power of ell over ZZ");
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), ell, static_cast<unsigned long>(exponent));
    return out;
  }
}

unsigned hecke_scale_exponent(const SpaceParams& params) { return params.lambda() == 0 ? 1 : 0; }

std::size_t hecke_input_slots(const SpaceParams& params, u64 ell, std::size_t out_slots) {
  if (out_slots == 0) return 0;
  return static_cast<std::size_t>(ell * ell * (out_slots - 1) + SlotSeries<ModRing>::delta(params.r, ell) + 1);
}

template <class Ring>
SlotSeries<Ring> T_ell2(const SlotSeries<Ring>& f, const SpaceParams& params, u64 ell, std::size_t out_slots) {
  return apply_T(f, params, ell, out_slots, 0);
}

template <class Ring>
SlotSeries<Ring> scaled_T_ell2(const SlotSeries<Ring>& f, const SpaceParams& params, u64 ell,
                               std::size_t out_slots) {
  return apply_T(f, params, ell, out_slots, hecke_scale_exponent(params));
}

std::size_t matrix_of_T_slots(const SpaceParams& params, std::size_t t, u64 ell,
                              std::optional<std::size_t> residual_depth) {
  return hecke_input_slots(params, ell, default_depth(params, t, residual_depth));
}

template <class Ring>
HeckeMatrix<Ring> matrix_of_T(const SrsBasis<Ring>& basis, u64 ell, std::optional<std::size_t> residual_depth) {
  const SpaceParams& params = basis.params();
  const std::size_t t = basis.dimension();
  const std::size_t depth = default_depth(params, t, residual_depth);
  const Ring& ring = basis.ring();
  const unsigned d = std::is_same_v<Ring, IntegerRing> ? hecke_scale_exponent(params) : 0;

  // Leading slots must be unit upper triangular.
  std::vector<typename Ring::Element> diag_inv(t);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = j + 1; k < t; ++k) {
      if (!ring.is_zero(basis.form(k)[j])) throw InvalidArgument("basis is not triangular in its leading slots");
    }
    diag_inv[j] = ring.inverse(basis.form(j)[j]);
  }

  HeckeMatrix<Ring> hm{Matrix<Ring>(ring, t, t), ell, params, depth - t, d};
  for (std::size_t i = 0; i < t; ++i) {
    const SlotSeries<Ring> g = apply_T(basis.form(i), params, ell, depth, d);
    for (std::size_t j = 0; j < t; ++j) {
      auto v = g[j];
      for (std::size_t k = 0; k < j; ++k) v = ring.sub(v, ring.mul(hm.A(i, k), basis.form(k)[j]));
      hm.A(i, j) = ring.mul(v, diag_inv[j]);
    }
    for (std::size_t n = t; n < depth; ++n) {
      auto v = ring.zero();
      for (std::size_t k = 0; k < t; ++k) v = ring.add(v, ring.mul(hm.A(i, k), basis.form(k)[n]));
      if (v != g[n]) throw SpanViolation(i, n);
    }
  }
  return hm;
}

template <class Ring>
RecursionTriple<Ring> recursion_matrices(const HeckeMatrix<Ring>& hm, u64 k) {
  if (k == 0) throw InvalidArgument("recursion index k must be positive");
  if (hm.scale_exponent != 0) throw InvalidArgument("recursion needs the unscaled Hecke matrix");
  const Ring& ring = hm.A.ring();
  const std::size_t t = hm.A.rows();
  const auto corner = ring.neg(ell_power(ring, hm.ell, hm.params.block_exponent()));
  const Matrix<Ring> Xk = block_matrix(hm.A, corner).pow(k);
  Matrix<Ring> Ak(ring, t, t), Akm1(ring, t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      Ak(i, j) = Xk(i, j);
      Akm1(i, j) = Xk(t + i, j);
    }
  }
  const int r = hm.params.r;
  const i64 twelve = ((r - 1) / 2) % 2 == 0 ? 12 : -12;
  const int chi = kronecker(twelve, static_cast<i64>(hm.ell));
  const auto b = signed_unit(ring, ring.neg(ell_power(ring, hm.ell, hm.params.lambda() - 1)), chi);
  return {Ak, Akm1.scale(b), Akm1.scale(corner)};
}

template <class Ring>
std::vector<RecursionTriple<Ring>> recursion_sequence(const HeckeMatrix<Ring>& hm, u64 count) {
  if (hm.scale_exponent != 0) throw InvalidArgument("recursion needs the unscaled Hecke matrix");
  const Ring& ring = hm.A.ring();
  const std::size_t t = hm.A.rows();
  const auto corner = ring.neg(ell_power(ring, hm.ell, hm.params.block_exponent()));
  const int r = hm.params.r;
  const i64 twelve = ((r - 1) / 2) % 2 == 0 ? 12 : -12;
  const int chi = kronecker(twelve, static_cast<i64>(hm.ell));
  const auto b = signed_unit(ring, ring.neg(ell_power(ring, hm.ell, hm.params.lambda() - 1)), chi);

  std::vector<RecursionTriple<Ring>> out;
  Matrix<Ring> prev = Matrix<Ring>::identity(ring, t);
  Matrix<Ring> cur = hm.A;
  for (u64 k = 1; k <= count; ++k) {
    out.push_back({cur, prev.scale(b), prev.scale(corner)});
    Matrix<Ring> next = hm.A * cur + prev.scale(corner);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

std::size_t verify_recursion_slots(const SpaceParams& params, std::size_t t, u64 ell, u64 k,
                                   std::size_t check_slots) {
  const u64 q = ell * ell, delta = SlotSeries<ModRing>::delta(params.r, ell);
  u64 scale = 1, shift = 0;
  for (u64 j = 0; j < k; ++j) {
    shift = q * shift + delta;
    scale *= q;
  }
  const auto lhs = static_cast<std::size_t>(scale * (check_slots == 0 ? 0 : check_slots - 1) + shift + 1);
  // The recursion matrices come from matrix_of_T on the same basis.
  return std::max(lhs, matrix_of_T_slots(params, t, ell));
}

template <class Ring>
RecursionReport verify_recursion(const SrsBasis<Ring>& basis, u64 ell, u64 k, std::size_t check_slots) {
  const SpaceParams& params = basis.params();
  const std::size_t t = basis.dimension();
  const std::size_t need = verify_recursion_slots(params, t, ell, k, check_slots);
  if (basis.precision() < need) throw InsufficientPrecision("recursion check", need, basis.precision());
  const Ring& ring = basis.ring();
  const RecursionTriple<Ring> rt = recursion_matrices(matrix_of_T(basis, ell), k);
  const u64 q = ell * ell, delta = SlotSeries<Ring>::delta(params.r, ell);

  RecursionReport report{k, check_slots, true, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < t; ++i) {
    SlotSeries<Ring> lhs = basis.form(i);
    for (u64 j = 0; j < k; ++j) lhs = lhs.slot_U(ell);
    for (std::size_t n = 0; n < check_slots; ++n) {
      const int chi = kronecker(static_cast<i64>((24 * n + params.r) % ell), static_cast<i64>(ell));
      const bool dilated = n >= delta && (n - delta) % q == 0;
      auto v = ring.zero();
      for (std::size_t j = 0; j < t; ++j) {
        const auto fj = basis.form(j)[n];
        v = ring.add(v, ring.mul(rt.A(i, j), fj));
        v = ring.add(v, signed_unit(ring, ring.mul(rt.B(i, j), fj), chi));
        if (dilated) v = ring.add(v, ring.mul(rt.C(i, j), basis.form(j)[(n - delta) / q]));
      }
      if (v != lhs[n]) {
        report.equal = false;
        report.first_mismatch_form = i;
        report.first_mismatch_slot = n;
        return report;
      }
    }
  }
  return report;
}

BlockMatrix block_X(const Matrix<ModRing>& A, u64 ell, int e) {
  const ModRing& ring = A.ring();
  return {block_matrix(A, ring.neg(ell_power(ring, ell, e))), A.rows(), e};
}

BlockMatrix block_X(const HeckeMatrix<ModRing>& hm) {
  if (hm.scale_exponent != 0) throw InvalidArgument("block matrix needs the unscaled Hecke matrix");
  return block_X(hm.A, hm.ell, hm.params.block_exponent());
}

PglOrder order_in_PGL(const Matrix<ModRing>& X, u64 cap) {
  if (X.rows() != X.cols() || X.rows() == 0) throw InvalidArgument("order needs a non-empty square matrix");
  const ModRing& ring = X.ring();
  Matrix<ModRing> Y = X;
  for (u64 k = 1; k <= cap; ++k) {
    if (auto c = Y.scalar_value(); c && ring.is_unit(*c)) return {k, *c};
    if (k < cap) Y = Y * X;
  }
  throw CapExceeded(cap, std::move(Y));
}

u64 order_in_GL(const Matrix<ModRing>& X, u64 cap) {
  const PglOrder pgl = order_in_PGL(X, cap);
  const u64 order = pgl.order * multiplicative_order(pgl.scalar, X.ring().modulus());
  if (!(X.pow(order) == Matrix<ModRing>::identity(X.ring(), X.rows()))) {
    throw Error("GL order check failed: X^" + std::to_string(order) + " is not the identity");
  }
  return order;
}

EigenSplit eigen_split(const HeckeMatrix<ModRing>& hm, u64 cap) {
  const Modulus& modulus = hm.A.ring().modulus();
  if (!modulus.is_prime()) throw InvalidArgument("eigen_split needs a prime modulus");
  const u64 p = modulus.value();
  const int e = hm.params.block_exponent();
  EigenSplit out;
  const fp::Poly chi = fp::charpoly(hm.A);
  if (!fp::is_squarefree(chi, p)) {
    out.lcm = order_in_PGL(block_X(hm).X, cap).order;
    return out;
  }
  out.split = true;
  out.lcm = 1;
  for (const fp::Poly& g : fp::factor_squarefree(chi, p)) {
    LocalFactor lf;
    lf.poly = g;
    if (g.size() == 2) lf.eigenvalue = (p - g[0]) % p;
    lf.order = order_in_PGL(block_X(fp::companion(g, hm.A.ring()), hm.ell, e).X, cap).order;
    out.lcm = lcm(out.lcm, lf.order);
    out.factors.push_back(std::move(lf));
  }
  return out;
}

Matrix<ModRing> reduce(const Matrix<IntegerRing>& a, const Modulus& modulus) {
  const ModRing ring(modulus);
  Matrix<ModRing> out(ring, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.from_bigint(a(i, j));
  return out;
}

template struct HeckeMatrix<IntegerRing>;
template struct HeckeMatrix<ModRing>;

#define PARTCONG_INSTANTIATE(R)                                                                           \
  template R::Element ell_power<R>(const R&, u64, i64);                                                   \
  template SlotSeries<R> T_ell2<R>(const SlotSeries<R>&, const SpaceParams&, u64, std::size_t);           \
  template SlotSeries<R> scaled_T_ell2<R>(const SlotSeries<R>&, const SpaceParams&, u64, std::size_t);    \
  template HeckeMatrix<R> matrix_of_T<R>(const SrsBasis<R>&, u64, std::optional<std::size_t>);            \
  template RecursionTriple<R> recursion_matrices<R>(const HeckeMatrix<R>&, u64);                          \
  template std::vector<RecursionTriple<R>> recursion_sequence<R>(const HeckeMatrix<R>&, u64);             \
  template RecursionReport verify_recursion<R>(const SrsBasis<R>&, u64, u64, std::size_t);

PARTCONG_INSTANTIATE(IntegerRing)
PARTCONG_INSTANTIATE(ModRing)

#undef PARTCONG_INSTANTIATE

}  // namespace partcong
