#include "padeguard/structmat.hpp"

#include <string>

namespace padeguard::structmat {

namespace {

void require_series(std::span<const Complex> c, int m, int n) {
    if (m < 0 || n < 0) {
        throw InvalidInput("degrees must be nonnegative");
    }
    if (static_cast<long>(c.size()) < static_cast<long>(m) + n + 1) {
        throw InvalidInput("insufficient coefficients: need " + std::to_string(m + n + 1) +
                           ", got " + std::to_string(c.size()));
    }
}

Complex coeff(std::span<const Complex> c, int j) {
    return j < 0 ? Complex{} : c[static_cast<std::size_t>(j)];
}

}  // namespace

Matrix build_C(std::span<const Complex> c, int m, int n) {
    require_series(c, m, n);
    Matrix C(n, n + 1);
    for (int i = 1; i <= n; ++i) {
        for (int k = 0; k <= n; ++k) {
            C(i - 1, k) = coeff(c, m + i - k);
        }
    }
    return C;
}

Matrix build_T(std::span<const Complex> c, int m, int n) {
    require_series(c, m, n);
    const int rows = m + n + 1;
    Matrix T = Matrix::Zero(rows, m + n + 2);
    for (int j = 0; j <= m; ++j) {
        T(j, j) = 1.0;
    }
    for (int k = 0; k <= n; ++k) {
        for (int j = 0; j < rows; ++j) {
            T(j, m + 1 + k) = -coeff(c, j - k);
        }
    }
    return T;
}

Matrix build_Q(const Polynomial& q, int m, int n) {
    if (q.formal_degree() != n) {
        throw InvalidInput("Q: denominator formal degree must equal n");
    }
    const int order = m + n + 1;
    Matrix Q = Matrix::Zero(order, order);
    for (int col = 0; col < order; ++col) {
        for (int i = 0; i <= n && col + i < order; ++i) {
            Q(col + i, col) = q[i];
        }
    }
    return Q;
}

Matrix build_S(const Polynomial& p, const Polynomial& q) {
    const int m = p.formal_degree();
    const int n = q.formal_degree();
    Matrix S = Matrix::Zero(m + n + 1, m + n + 2);
    for (int k = 0; k <= m; ++k) {
        for (int i = 0; i <= n; ++i) {
            S(k + i, k) = q[i];
        }
    }
    for (int k = 0; k <= n; ++k) {
        for (int i = 0; i <= m; ++i) {
            S(k + i, m + 1 + k) = -p[i];
        }
    }
    return S;
}

Matrix build_square_sylvester(const Polynomial& p, const Polynomial& q) {
    const int m = p.formal_degree();
    const int n = q.formal_degree();
    if (m + n == 0) {
        throw InvalidInput("square Sylvester matrix needs m + n >= 1");
    }
    const Matrix S = build_S(p, q);
    Matrix out(m + n, m + n);
    out.leftCols(m) = S.block(0, 0, m + n, m);
    out.rightCols(n) = S.block(0, m + 1, m + n, n);
    return out;
}

StructuredMatrices build_all(std::span<const Complex> c, const Polynomial& p, const Polynomial& q) {
    const int m = p.formal_degree();
    const int n = q.formal_degree();
    return {build_C(c, m, n), build_T(c, m, n), build_Q(q, m, n), build_S(p, q), m, n};
}

}  // namespace padeguard::structmat
