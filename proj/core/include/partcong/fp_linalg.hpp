#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partcong/matrix.hpp"

namespace partcong::fp {

// Polynomial over F_p, coefficients from the constant term up; no trailing zeros.
using Poly = std::vector<u64>;

void trim(Poly& f);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
Poly make_monic(Poly f, u64 p);
Poly derivative(const Poly& f, u64 p);
// base^e mod f.
Poly powmod(Poly base, u64 e, const Poly& f, u64 p);

// det(x I - A) over a prime field, via reduction to Hessenberg form.
Poly charpoly(const Matrix<ModRing>& A);

bool is_squarefree(const Poly& f, u64 p);

// Monic irreducible factors of a monic squarefree f, sorted by degree then
// coefficients. Equal-degree splitting uses a fixed-seed generator.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p);

// Matrix whose characteristic polynomial is the monic f.
Matrix<ModRing> companion(const Poly& f, const ModRing& ring);

// Basis of { x : x A = 0 } over a prime field.
std::vector<std::vector<u64>> left_kernel(const Matrix<ModRing>& A);

}  // namespace partcong::fp
