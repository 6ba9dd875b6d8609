#include "partcong/pipeline.hpp"

#include <algorithm>
#include <map>

namespace partcong {

namespace {

constexpr int kFiveEta = 19;
constexpr int kFiveEtaEven = 23;

std::vector<std::vector<u64>> rows_of(const Matrix<ModRing>& A) {
  std::vector<std::vector<u64>> out(A.rows(), std::vector<u64>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[i][j] = A(i, j);
  return out;
}

BasisRecipe recipe_for(const SpaceParams& params, const CertifyOptions& options) {
  if (options.recipe) {
    if (options.recipe->params.r != params.r || options.recipe->params.s != params.s) {
      throw InvalidArgument("supplied basis recipe belongs to a different space");
    }
    BasisRecipe recipe = *options.recipe;
    recipe.params = params;
    return recipe;
  }
  return recipe_for_mode(params, options.mode);
}

std::size_t verification_depth(const SpaceParams& params, std::size_t t, const CertifyOptions& options) {
  if (options.precision_slots) {
    if (*options.precision_slots < t) {
      throw InvalidArgument("precision slots must be at least the dimension " + std::to_string(t));
    }
    return *options.precision_slots;
  }
  return std::max(sturm_slots(params), t);
}

std::size_t slots_for(const SpaceParams& params, std::size_t depth, const std::vector<u64>& ells) {
  std::size_t slots = depth;
  for (u64 ell : ells) {
    require_slot_prime(ell);
    slots = std::max(slots, hecke_input_slots(params, ell, depth));
  }
  return slots;
}

SrsBasis<ModRing> build_basis(u64 m, unsigned i, const std::vector<u64>& ells, const CertifyOptions& options) {
  const SpaceParams params = certify_space(m, i);
  const BasisRecipe recipe = recipe_for(params, options);
  const std::size_t depth = verification_depth(params, recipe.dimension(), options);
  return srs_basis(ModRing(Modulus::prime_power(m, i)), recipe, slots_for(params, depth, ells));
}

std::string power_text(u64 base, const std::string& exponent) { return std::to_string(base) + "^" + exponent; }

// n0 with m^j ell n0 = -1 mod 24, for odd j (use_m) or even j.
u64 residue_condition(u64 m, u64 ell, bool use_m) {
  const u64 unit = (use_m ? m % 24 : 1) * (ell % 24) % 24;
  return 24 - unit;
}

struct Rendered {
  std::string statement;
  std::vector<std::string> conditions;
};

Rendered render(u64 m, unsigned j_min, u64 ell, u64 order, const std::string& modulus_text, bool require_m_coprime) {
  Rendered out;
  const std::string e = std::to_string(2 * order) + "u-1";
  out.statement = "p((" + power_text(m, "j") + "*" + power_text(ell, "(" + e + ")") + "*n+1)/24) = 0 mod " +
                  modulus_text + " for all j >= " + std::to_string(j_min) + " and u >= 1";
  out.conditions.push_back("n = " + std::to_string(residue_condition(m, ell, true)) + " mod 24 for odd j, n = " +
                           std::to_string(residue_condition(m, ell, false)) + " mod 24 for even j");
  out.conditions.push_back(std::to_string(ell) + " does not divide n");
  if (require_m_coprime) out.conditions.push_back(std::to_string(m) + " does not divide n");
  return out;
}

u64 gl_order(const Matrix<ModRing>& X, const PglOrder& pgl) {
  const u64 order = pgl.order * multiplicative_order(pgl.scalar, X.ring().modulus());
  if (!(X.pow(order) == Matrix<ModRing>::identity(X.ring(), X.rows()))) {
    throw Error("GL order check failed at " + std::to_string(order));
  }
  return order;
}

void run_spot_checks(CongruenceCertificate& cert, unsigned modulus_power, unsigned j, bool require_m_coprime,
                     const CertifyOptions& options, const PartitionTable* table) {
  if (!options.spot_checks) return;
  SpotCheckRequest req;
  req.m = cert.m;
  req.i = modulus_power;
  req.j = j;
  req.ell = cert.ell;
  req.e = cert.exponent;
  req.require_m_coprime = require_m_coprime;
  req.budget = options.partition_budget;
  req.n_list = options.n_list.empty() ? admissible_n(cert.m, j, cert.ell, cert.exponent, 3, require_m_coprime)
                                      : options.n_list;
  cert.spot_checks = spot_check_congruence(req, table);
}

SrsBasis<ModRing> five_basis(int r, u64 max_ell) {
  const SpaceParams params = SpaceParams::make(r, 0);
  const std::size_t depth = std::max<std::size_t>(sturm_slots(params), 1);
  std::size_t slots = depth;
  if (max_ell >= 7) slots = hecke_input_slots(params, max_ell, depth);
  return srs_basis(ModRing(Modulus::prime_power(5, 1)), params, slots, BasisMode::Echelon);
}

CongruenceCertificate certify_five(unsigned i, u64 ell, const CertifyOptions& options, const PartitionTable* table) {
  if (ell < 7) throw InvalidArgument("the m = 5 route needs a prime ell >= 7");
  const K5Context ctx(ell);
  const u64 a = ctx.eigenvalues(ell).first;
  const ModRing ring(Modulus::prime_power(5, 1));
  Matrix<ModRing> A(ring, 1, 1);
  A(0, 0) = a;
  const SpaceParams params = SpaceParams::make(kFiveEta, 0);
  const BlockMatrix X = block_X(A, ell, params.block_exponent());
  const PglOrder pgl = order_in_PGL(X.X, options.order_cap);
  if (pgl.order != k5_case_value(ell)) {
    throw MismatchWithTheorem("PGL(2, F_5) order " + std::to_string(pgl.order) + " differs from the case value " +
                              std::to_string(k5_case_value(ell)));
  }

  CongruenceCertificate cert;
  cert.m = 5;
  cert.i = i;
  cert.ell = ell;
  cert.space = params;
  cert.t = 1;
  const BasisRecipe recipe = recipe_for_mode(params, BasisMode::Echelon);
  cert.basis = {to_string(recipe.mode), recipe.descriptor(), recipe.hash()};
  cert.modulus = 5;
  cert.A = rows_of(A);
  cert.residual_depth = sturm_slots(params) - 1;
  cert.e = params.block_exponent();
  cert.K = pgl.order;
  cert.k_lcm = pgl.order;
  cert.M_period = gl_order(X.X, pgl);
  cert.pgl_scalar = pgl.scalar;
  cert.exponent = 2 * cert.K - 1;
  const std::string modulus_text = "5^(j+1)";
  Rendered r = render(5, i, ell, cert.K, modulus_text, false);
  cert.statement = r.statement;
  cert.conditions = r.conditions;
  cert.series_precision = hecke_input_slots(params, ell, sturm_slots(params));
  run_spot_checks(cert, i + 1, i, false, options, table);
  return cert;
}

}  // namespace

AbWeight ab_weight(u64 m, unsigned i) {
  if (m < 13 || !is_prime(m)) throw InvalidArgument("ab_weight needs a prime m >= 13");
  if (i == 0) throw InvalidArgument("ab_weight needs i >= 1");
  const u64 mi = checked_pow(m, i);
  AbWeight w;
  w.m = m;
  w.i = i;
  w.beta = *inverse_mod(24 % mi, mi);
  w.eta_exponent = static_cast<int>((24 * static_cast<u128>(w.beta) - 1) / mi);
  const i64 prev = static_cast<i64>(checked_pow(m, i - 1));
  const i64 mm = static_cast<i64>(m);
  const i64 k = i % 2 == 1 ? (prev + 1) * (mm - 1) / 2 - 12 * (mm / 24) - 12 : prev * (mm - 1) - 12;
  if (k < 0 || k > (i64{1} << 30)) throw InvalidArgument("weight k_{m,i} out of range");
  w.k = static_cast<int>(k);
  return w;
}

SpaceParams certify_space(u64 m, unsigned i) {
  const AbWeight w = ab_weight(m, i);
  SpaceParams params = SpaceParams::make(w.eta_exponent, w.k);
  params.m = m;
  params.i = i;
  return params;
}

SpaceContext::SpaceContext(u64 m, unsigned i, const std::vector<u64>& ells, const CertifyOptions& options)
    : m_(m), i_(i), depth_(0), basis_(build_basis(m, i, ells, options)) {
  depth_ = verification_depth(basis_.params(), basis_.dimension(), options);
}

CongruenceCertificate certify(u64 m, unsigned i, u64 ell, const CertifyOptions& options, const SpaceContext* context,
                              const PartitionTable* table) {
  require_slot_prime(ell);
  if (i == 0) throw InvalidArgument("i must be at least 1");
  if (ell == m) throw InvalidArgument("ell must differ from m");
  if (m == 5) return certify_five(i, ell, options, table);
  if (m == 7 || m == 11) {
    throw InvalidArgument("m = " + std::to_string(m) +
                          " has no cusp form space to run; the Hecke pipeline needs a prime m >= 13");
  }
  if (m < 13 || !is_prime(m)) throw InvalidArgument("m must be a prime >= 13");

  std::optional<SpaceContext> own;
  if (context) {
    if (context->m() != m || context->i() != i) throw InvalidArgument("space context is for a different (m, i)");
    const std::size_t need = hecke_input_slots(context->params(), ell, context->depth());
    if (context->basis().precision() < need) {
      throw InsufficientPrecision("shared basis for ell = " + std::to_string(ell), need,
                                  context->basis().precision());
    }
  } else {
    own.emplace(m, i, std::vector<u64>{ell}, options);
    context = &*own;
  }

  const SrsBasis<ModRing>& basis = context->basis();
  const HeckeMatrix<ModRing> hm = matrix_of_T(basis, ell, context->residual());
  const BlockMatrix X = block_X(hm);
  const PglOrder pgl = order_in_PGL(X.X, options.order_cap);

  CongruenceCertificate cert;
  cert.m = m;
  cert.i = i;
  cert.ell = ell;
  cert.space = basis.params();
  cert.t = basis.dimension();
  cert.basis = {to_string(basis.recipe().mode), basis.recipe().descriptor(), basis.recipe().hash()};
  cert.modulus = basis.ring().modulus().value();
  cert.A = rows_of(hm.A);
  cert.residual_depth = hm.residual_depth;
  cert.e = X.e;
  cert.K = pgl.order;
  cert.pgl_scalar = pgl.scalar;
  cert.M_period = gl_order(X.X, pgl);
  if (i == 1) cert.k_lcm = eigen_split(hm, options.order_cap).lcm;
  cert.exponent = 2 * cert.K - 1;

  const std::string modulus_text = i == 1 ? std::to_string(m) : std::to_string(m) + "^" + std::to_string(i);
  const bool require_m_coprime = i == 1;
  Rendered r = render(m, i, ell, cert.K, modulus_text, require_m_coprime);
  cert.statement = r.statement;
  cert.conditions = r.conditions;
  if (cert.k_lcm && *cert.k_lcm != cert.K) {
    cert.statement_lcm = render(m, i, ell, *cert.k_lcm, modulus_text, require_m_coprime).statement;
  }
  cert.series_precision = hecke_input_slots(cert.space, ell, context->depth());
  run_spot_checks(cert, i, i, require_m_coprime, options, table);
  return cert;
}

K5Context::K5Context(u64 max_ell)
    : max_ell_(max_ell), s19_(five_basis(kFiveEta, max_ell)), s23_(five_basis(kFiveEtaEven, max_ell)) {}

std::pair<u64, u64> K5Context::eigenvalues(u64 ell) const {
  if (ell < 7 || !is_prime(ell)) throw InvalidArgument("eigenvalues need a prime ell >= 7");
  if (ell > max_ell_) throw InvalidArgument("ell exceeds the context range " + std::to_string(max_ell_));
  return {matrix_of_T(s19_, ell).A(0, 0), matrix_of_T(s23_, ell).A(0, 0)};
}

u64 k5_case_value(u64 ell) {
  if (ell < 7 || !is_prime(ell)) throw InvalidArgument("k5 needs a prime ell >= 7");
  switch (ell % 5) {
    case 1:
      return 5;
    case 2:
    case 3:
      return 4;
    default:
      return 2;
  }
}

u64 k5(u64 ell, const K5Context& context) {
  const u64 expected = k5_case_value(ell);
  const u64 a = context.eigenvalues(ell).first;
  const ModRing ring(Modulus::prime_power(5, 1));
  Matrix<ModRing> A(ring, 1, 1);
  A(0, 0) = a;
  const u64 order = order_in_PGL(block_X(A, ell, kFiveEta - 2).X).order;
  if (order != expected) {
    throw MismatchWithTheorem("ell = " + std::to_string(ell) + ": PGL(2, F_5) order " + std::to_string(order) +
                              ", case value " + std::to_string(expected));
  }
  return expected;
}

u64 k5(u64 ell) { return k5(ell, K5Context(ell)); }

std::string to_string(SporadicCase c) {
  switch (c) {
    case SporadicCase::OneModFive:
      return "ell=1 mod 5";
    case SporadicCase::TwoModFive:
      return "ell=2 mod 5";
    case SporadicCase::ThreeModFive:
      return "ell=3 mod 5";
    case SporadicCase::None:
      break;
  }
  return "none";
}

SporadicResult sporadic_check(u64 ell, unsigned i, u64 n, u64 budget) {
  if (ell < 7 || !is_prime(ell)) throw InvalidArgument("sporadic_check needs a prime ell >= 7");
  if (i == 0) throw InvalidArgument("i must be at least 1");
  if (pow_mod(5, i, 24) * (n % 24) % 24 != 23) throw InadmissibleN("5^i n is not -1 mod 24");
  if (n % ell == 0) throw InadmissibleN("ell divides n");

  SporadicResult out;
  out.legendre = kronecker(static_cast<i64>(ell - n % ell), static_cast<i64>(ell));
  const int odd_sign = i % 2 == 1 ? 1 : -1;  // (-1)^(i-1)
  const auto assign = [&out](SporadicCase which, unsigned k_ell, unsigned m_ell) {
    out.which = which;
    out.k_ell = k_ell;
    out.m_ell = m_ell;
  };
  if (ell % 5 == 1 && out.legendre == -1) assign(SporadicCase::OneModFive, 2, 5);
  if (ell % 5 == 2 && out.legendre == odd_sign) assign(SporadicCase::TwoModFive, 2, 4);
  if (ell % 5 == 3 && out.legendre == odd_sign) assign(SporadicCase::ThreeModFive, 1, 4);

  const bool relation = !out.applicable() && ell % 5 == 1 && i % 2 == 1;
  if (!out.applicable() && !relation) return out;

  BigInt five_i, ell_pow;
  mpz_ui_pow_ui(five_i.get_mpz_t(), 5, i);
  mpz_ui_pow_ui(ell_pow.get_mpz_t(), ell, relation ? 4 : 2 * out.k_ell);
  const BigInt N(static_cast<unsigned long>(n));
  out.argument = (five_i * ell_pow * N + 1) / 24;
  if (relation) out.base_argument = (five_i * N + 1) / 24;
  const BigInt cap(static_cast<unsigned long>(budget));
  if (out.argument > cap) {
    out.status = SpotStatus::Infeasible;
    return out;
  }

  const Modulus modulus = Modulus::prime_power(5, i + 1);
  const PartitionTable table = partition_mod(out.argument.get_ui(), modulus);
  out.residue = table[out.argument.get_ui()];
  if (!relation) {
    out.status = *out.residue == 0 ? SpotStatus::Pass : SpotStatus::Fail;
    return out;
  }
  out.base_residue = table[out.base_argument->get_ui()];
  out.predicted = modulus.mul(modulus.reduce(3 * (1 + out.legendre)), *out.base_residue);
  out.status = *out.residue == *out.predicted ? SpotStatus::Pass : SpotStatus::Fail;
  return out;
}

PeriodResult period_m(u64 m, u64 cap, BasisMode mode) {
  const SpaceParams params = SpaceParams::chua(m);
  const BasisRecipe recipe = recipe_for_mode(params, mode);
  const std::size_t depth = std::max(sturm_slots(params), recipe.dimension());
  const SrsBasis<ModRing> basis =
      srs_basis(ModRing(Modulus::prime_power(m, 1)), recipe, hecke_input_slots(params, m, depth));
  const HeckeMatrix<ModRing> hm = matrix_of_T(basis, m);

  PeriodResult out;
  out.m = m;
  out.t = basis.dimension();
  out.A_bound = 2 * dim_Ms(params.s);
  out.matrix = rows_of(hm.A);

  std::map<std::vector<u64>, u64> seen;
  Matrix<ModRing> power = Matrix<ModRing>::identity(hm.A.ring(), out.t);
  for (u64 k = 0; k <= cap; ++k) {
    auto [it, inserted] = seen.emplace(power.data(), k);
    if (!inserted) {
      out.preperiod = it->second;
      out.period = k - it->second;
      return out;
    }
    power = power * hm.A;
  }
  throw CapExceeded(cap, std::move(power));
}

}  // namespace partcong
