#pragma once

#include <span>

#include "padeguard/polyrat.hpp"
#include "padeguard/types.hpp"

// Dense realizations of the structured matrices attached to an [m|n] Padé
// problem. Index conventions (0-based here):
//
//   C (n x (n+1))           C(i-1, k)   = c_{m+i-k},  i = 1..n, k = 0..n
//   T ((m+n+1) x (m+n+2))   [ I_{m+1} | -c_{j-k} ] column block per k = 0..n
//   Q ((m+n+1) x (m+n+1))   lower triangular banded Toeplitz, first column q
//   S ((m+n+1) x (m+n+2))   shifted copies of q (m+1 cols) then of -p (n+1 cols)
//
// with c_j = 0 for j < 0. S = Q T holds whenever p is the Padé numerator of q.
namespace padeguard::structmat {

Matrix build_C(std::span<const Complex> c, int m, int n);
Matrix build_T(std::span<const Complex> c, int m, int n);
Matrix build_Q(const Polynomial& q, int m, int n);
/// S(q, -p); formal degrees are taken from the polynomials.
Matrix build_S(const Polynomial& p, const Polynomial& q);

/// Classical (m+n) x (m+n) Sylvester matrix: S without its last row and
/// without the last column of each column block. Throws when m + n = 0.
Matrix build_square_sylvester(const Polynomial& p, const Polynomial& q);

/// The reduced Sylvester-like matrix of a pair in R_{m-1,n-1}, shape
/// (m+n-1) x (m+n); identical to build_S on the lower-degree pair.
inline Matrix build_reduced_S(const Polynomial& u, const Polynomial& v) { return build_S(u, v); }

struct StructuredMatrices {
    Matrix C;
    Matrix T;
    Matrix Q;
    Matrix S;
    int m = 0;
    int n = 0;
};

/// All four matrices for the series c and the coefficient pair (p, q).
StructuredMatrices build_all(std::span<const Complex> c, const Polynomial& p, const Polynomial& q);

}  // namespace padeguard::structmat
