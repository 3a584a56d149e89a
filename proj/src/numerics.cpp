#include "padeguard/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace padeguard::numerics {

double SvdResult::largest() const {
    return singular_values.size() == 0 ? 0.0 : singular_values(0);
}

double SvdResult::smallest_row_rank() const {
    const auto rows = U.rows();
    if (rows == 0 || rows > singular_values.size()) {
        return 0.0;
    }
    return singular_values(rows - 1);
}

SvdResult svd(const Matrix& A) {
    if (A.size() == 0) {
        throw InvalidInput("svd of an empty matrix");
    }
    Eigen::JacobiSVD<Matrix> solver(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success) {
        throw Error("svd did not converge");
    }
    return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

double spectral_norm(const Matrix& A) {
    if (A.size() == 0) {
        return 0.0;
    }
    return svd(A).largest();
}

namespace {

double checked_smallest(const Matrix& A, double& largest) {
    const auto s = svd(A);
    largest = s.largest();
    const double smallest = s.smallest_row_rank();
    if (!(smallest > 0.0)) {
        throw RankDeficient("matrix does not have full row rank");
    }
    return smallest;
}

}  // namespace

double pinv_norm(const Matrix& A) {
    double largest = 0.0;
    return 1.0 / checked_smallest(A, largest);
}

double cond(const Matrix& A) {
    double largest = 0.0;
    const double smallest = checked_smallest(A, largest);
    return largest / smallest;
}

Matrix pinv(const Matrix& A) {
    const auto s = svd(A);
    const auto rows = A.rows();
    if (!(s.smallest_row_rank() > 0.0)) {
        throw RankDeficient("pseudoinverse of a row rank deficient matrix");
    }
    // A = U diag(s) V_1^*  with V_1 the first `rows` columns of V.
    Matrix out = s.V.leftCols(rows);
    for (Eigen::Index k = 0; k < rows; ++k) {
        out.col(k) /= s.singular_values(k);
    }
    return out * s.U.adjoint();
}

namespace {

// Diagonal similarity scaling by powers of two (EISPACK balanc, no permutations).
void balance(Matrix& A) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const auto n = A.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j != i) {
                    c += std::abs(A(j, i));
                    r += std::abs(A(i, j));
                }
            }
            if (c == 0.0 || r == 0.0) {
                continue;
            }
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                A.row(i) /= f;
                A.col(i) *= f;
            }
        }
    }
}

void newton_polish(const Polynomial& p, std::vector<Complex>& roots) {
    const Polynomial dp = p.derivative();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != k) {
                gap = std::min(gap, std::abs(roots[j] - roots[k]));
            }
        }
        Complex z = roots[k];
        double res = std::abs(eval_poly(p, z));
        for (int it = 0; it < 4 && res > 0.0; ++it) {
            const Complex d = eval_poly(dp, z);
            if (d == Complex{}) {
                break;
            }
            const Complex step = eval_poly(p, z) / d;
            const Complex next = z - step;
            const double next_res = std::abs(eval_poly(p, next));
            // Stay inside the current root's neighbourhood.
            if (!(next_res < res) || std::abs(next - roots[k]) >= 0.5 * gap) {
                break;
            }
            z = next;
            res = next_res;
        }
        roots[k] = z;
    }
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p) {
    const int deg = p.degree();
    if (deg < 0) {
        throw InvalidInput("roots of the zero polynomial");
    }
    if (deg == 0) {
        return {};
    }
    const auto c = p.coeffs();
    const Complex lead = c[deg];
    Matrix companion = Matrix::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (int i = 0; i < deg; ++i) {
        companion(i, deg - 1) = -c[i] / lead;
    }
    balance(companion);
    Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw Error("companion eigenvalue iteration did not converge");
    }
    std::vector<Complex> roots(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
    newton_polish(p.with_formal_degree(deg), roots);
    return roots;
}

Vector solve_lower_triangular(const Matrix& L, const Vector& b) {
    Matrix B = b;
    return solve_lower_triangular(L, B).col(0);
}

Matrix solve_lower_triangular(const Matrix& L, const Matrix& B) {
    if (L.rows() != L.cols() || L.rows() != B.rows()) {
        throw InvalidInput("triangular solve: shape mismatch");
    }
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        if (L(i, i) == Complex{}) {
            throw RankDeficient("triangular solve: zero diagonal entry");
        }
    }
    return L.triangularView<Eigen::Lower>().solve(B);
}

Vector solve_square(const Matrix& A, const Vector& b) {
    if (A.rows() != A.cols() || A.rows() != b.size()) {
        throw InvalidInput("square solve: shape mismatch");
    }
    Eigen::FullPivLU<Matrix> lu(A);
    if (!lu.isInvertible()) {
        throw RankDeficient("square solve: matrix singular to working precision");
    }
    return lu.solve(b);
}

}  // namespace padeguard::numerics
