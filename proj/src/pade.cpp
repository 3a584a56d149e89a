#include "padeguard/pade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "padeguard/numerics.hpp"
#include "padeguard/spurious.hpp"
#include "padeguard/structmat.hpp"

namespace padeguard {

double TaylorCoefficients::window_norm(int m, int n) const {
    double s = 0.0;
    const auto len = std::min<std::size_t>(c.size(), static_cast<std::size_t>(m + n + 1));
    for (std::size_t j = 0; j < len; ++j) {
        s += std::norm(c[j]);
    }
    return std::sqrt(s);
}

TaylorCoefficients scale_input(std::span<const Complex> c_raw, int m, int n,
                               const ScalingOptions& options) {
    if (m < 0 || n < 0) {
        throw InvalidInput("degrees must be nonnegative");
    }
    if (static_cast<long>(c_raw.size()) < static_cast<long>(m) + n + 1) {
        throw InvalidInput("need at least m + n + 1 Taylor coefficients");
    }
    if (options.radius == Complex{}) {
        throw InvalidInput("radius rescaling must be nonzero");
    }
    TaylorCoefficients out;
    out.c.assign(c_raw.begin(), c_raw.end());
    out.scale_b = options.radius;
    if (options.radius != Complex{1.0, 0.0}) {
        Complex power{1.0, 0.0};
        for (auto& cj : out.c) {
            cj *= power;
            power *= options.radius;
        }
    }
    const double norm = out.window_norm(m, n);
    if (norm == 0.0) {
        throw InvalidInput("the first m + n + 1 Taylor coefficients are all zero");
    }
    if (options.normalize) {
        out.scale_a = 1.0 / norm;
        for (auto& cj : out.c) {
            cj /= norm;
        }
    }
    return out;
}

DenominatorSolve pade_denominator(const Matrix& C) {
    const auto n = C.rows();
    if (C.cols() != n + 1) {
        throw InvalidInput("C must be n x (n+1)");
    }
    DenominatorSolve out;
    if (n == 0) {
        out.q = Vector::Ones(1);
        out.sigma_n = std::numeric_limits<double>::infinity();
        return out;
    }
    const auto s = numerics::svd(C);
    out.sigma_1 = s.singular_values(0);
    out.sigma_n = s.singular_values(n - 1);

    int nullity = 1;
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        if (s.singular_values(k) == 0.0 || s.singular_values(k) <= kNullityTol * out.sigma_1) {
            ++nullity;
        } else {
            break;
        }
    }
    out.nullity = nullity;

    const Matrix kernel = s.V.rightCols(nullity);
    if (nullity == 1) {
        out.q = kernel.col(0);
    } else {
        // Combination whose trailing nullity-1 entries vanish: lowest degree.
        const Matrix tail = kernel.bottomRows(nullity - 1);
        const auto ts = numerics::svd(tail);
        out.q = kernel * ts.V.col(nullity - 1);
    }
    out.q.normalize();
    out.sigma_n1 = (C * out.q).norm();
    return out;
}

Vector pade_numerator(std::span<const Complex> c, const Vector& q, int m, int n) {
    if (q.size() != n + 1) {
        throw InvalidInput("denominator length must be n + 1");
    }
    if (static_cast<long>(c.size()) < static_cast<long>(m) + 1) {
        throw InvalidInput("need at least m + 1 Taylor coefficients");
    }
    Vector p = Vector::Zero(m + 1);
    for (int j = 0; j <= m; ++j) {
        for (int k = 0; k <= std::min(j, n); ++k) {
            p(j) += c[j - k] * q(k);
        }
    }
    return p;
}

NormalizedVector normalize(const Vector& x_raw, int m, int n) {
    if (x_raw.size() != m + n + 2) {
        throw InvalidInput("stacked vector must have m + n + 2 entries");
    }
    const double norm = x_raw.norm();
    if (norm == 0.0) {
        throw InvalidInput("cannot normalize the zero vector");
    }
    NormalizedVector out;
    out.x.m = m;
    out.x.n = n;
    out.x.entries = x_raw / norm;
    const auto qpart = out.x.entries.tail(n + 1);
    Complex anchor = qpart(0);
    if (anchor == Complex{}) {
        Eigen::Index idx = 0;
        qpart.cwiseAbs().maxCoeff(&idx);
        anchor = qpart(idx);
        out.phase_from_largest = true;
        if (anchor == Complex{}) {
            throw InvalidInput("denominator part is zero");
        }
    }
    const Eigen::Index at = m + 1;
    out.x.entries *= std::conj(anchor) / std::abs(anchor);
    if (!out.phase_from_largest) {
        // Rounding leaves an imaginary part of order 1e-17 otherwise.
        out.x.entries(at) = std::abs(out.x.entries(at));
    }
    return out;
}

namespace {

// Cancel a common factor z^k: p(0) = c_0 q(0), so q(0) = 0 forces p(0) = 0 too.
void cancel_origin_factor(Vector& q) {
    const double tol = kLeadingZeroTol * q.norm();
    const auto n = q.size() - 1;
    int shift = 0;
    while (shift < n && std::abs(q(shift)) <= tol) {
        ++shift;
    }
    if (shift == 0) {
        return;
    }
    Vector shifted = Vector::Zero(n + 1);
    shifted.head(n + 1 - shift) = q.tail(n + 1 - shift);
    q = shifted;
}

}  // namespace

PadeResult pade(std::span<const Complex> c_raw, int m, int n, const ScalingOptions& options) {
    PadeResult res;
    res.m = m;
    res.n = n;
    res.series = scale_input(c_raw, m, n, options);
    const auto c = res.series.coeffs();

    auto den = pade_denominator(structmat::build_C(c, m, n));
    res.sigma_1 = den.sigma_1;
    res.sigma_n = den.sigma_n;
    res.sigma_n1 = den.sigma_n1;
    res.nullity = den.nullity;

    Vector q = den.q;
    cancel_origin_factor(q);
    const Vector p = pade_numerator(c, q, m, n);

    Vector stacked(m + n + 2);
    stacked << p, q;
    auto normalized = normalize(stacked, m, n);
    res.x = std::move(normalized.x);
    res.phase_from_largest = normalized.phase_from_largest;
    res.order_residual = (structmat::build_T(c, m, n) * res.x.entries).norm();

    const auto deg = assess_degeneracy(res.x.p(), res.x.q());
    res.defect = deg.defect;
    res.degenerate = deg.degenerate;
    res.common_root_distance = deg.closest_pair;
    return res;
}

PadeResult robust_pade(std::span<const Complex> c_raw, int m, int n, double tol,
                       const ScalingOptions& options) {
    if (!(tol > 0.0)) {
        throw InvalidInput("robust_pade: tol must be positive");
    }
    int mm = m;
    int nn = n;
    int steps = 0;
    while (true) {
        PadeResult res = pade(c_raw, mm, nn, options);
        const bool gap_ok = nn == 0 || res.sigma_n > tol * res.sigma_1;
        if (gap_ok && !res.degenerate) {
            res.reductions = steps;
            res.exhausted = n > 0 && nn == 0;
            return res;
        }
        if (mm == 0 || nn == 0) {
            break;
        }
        --mm;
        --nn;
        ++steps;
    }
    PadeResult fallback = pade(c_raw, std::max(m - n, 0), 0, options);
    fallback.reductions = steps;
    fallback.exhausted = true;
    return fallback;
}

RationalFunction PadeResult::unscaled() const {
    std::vector<Complex> p(m + 1), q(n + 1);
    Complex power{1.0, 0.0};
    for (int j = 0; j <= std::max(m, n); ++j) {
        if (j <= m) {
            p[j] = x.entries(j) / (series.scale_a * power);
        }
        if (j <= n) {
            q[j] = x.entries(m + 1 + j) / power;
        }
        power *= series.scale_b;
    }
    return RationalFunction(Polynomial(std::move(p)), Polynomial(std::move(q)));
}

}  // namespace padeguard
