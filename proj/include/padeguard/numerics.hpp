#pragma once

#include <vector>

#include "padeguard/polyrat.hpp"
#include "padeguard/types.hpp"

// Dense kernels on top of Eigen. Matrices here are small (a few hundred rows
// at most), so everything is a full dense factorization.
namespace padeguard::numerics {

struct SvdResult {
    RealVector singular_values;  // descending
    Matrix U;                    // full left factor
    Matrix V;                    // full right factor, columns unit norm

    /// Largest singular value, 0 for an empty spectrum.
    double largest() const;
    /// sigma_l with l = rows of the decomposed matrix; 0 when rows > cols.
    double smallest_row_rank() const;
};

SvdResult svd(const Matrix& A);

double spectral_norm(const Matrix& A);

/// ||A^+|| = 1 / sigma_l for l = rows(A). Throws RankDeficient when sigma_l is 0.
double pinv_norm(const Matrix& A);

/// sigma_1 / sigma_l, l = rows(A). Throws RankDeficient when sigma_l is 0.
double cond(const Matrix& A);

/// Moore-Penrose pseudoinverse of a full row rank matrix, via the SVD.
Matrix pinv(const Matrix& A);

/// Roots of the exact-degree polynomial (trailing exact zeros dropped) as
/// eigenvalues of the balanced companion matrix, polished by Newton steps.
/// Throws InvalidInput for the zero polynomial.
std::vector<Complex> poly_roots(const Polynomial& p);

/// Forward substitution. Throws RankDeficient on a zero diagonal entry.
Vector solve_lower_triangular(const Matrix& L, const Vector& b);
Matrix solve_lower_triangular(const Matrix& L, const Matrix& B);

/// LU with full pivoting. Throws RankDeficient when A is singular to working precision.
Vector solve_square(const Matrix& A, const Vector& b);

}  // namespace padeguard::numerics
