#include "padeguard/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "padeguard/numerics.hpp"

namespace padeguard::conditioning {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Spectrum {
    SingularExtremes extremes;
    double kappa = kInf;
    bool rank_deficient = true;
};

Spectrum spectrum(const Matrix& A) {
    Spectrum out;
    if (A.size() == 0) {
        out.kappa = 1.0;
        out.rank_deficient = false;
        return out;
    }
    const auto s = numerics::svd(A);
    out.extremes = {s.largest(), s.smallest_row_rank()};
    if (out.extremes.smallest > 0.0) {
        out.kappa = out.extremes.largest / out.extremes.smallest;
        out.rank_deficient = false;
    }
    return out;
}

bool has_imaginary_part(const auto& range) {
    return std::any_of(range.begin(), range.end(), [](const Complex& z) { return z.imag() != 0.0; });
}

}  // namespace

Diagnostics diagnostics(const TaylorCoefficients& c, const PadeResult& res) {
    Diagnostics d;
    const auto mats = structmat::build_all(c.coeffs(), res.x.p(), res.x.q());

    const auto sc = spectrum(mats.C);
    const auto st = spectrum(mats.T);
    const auto sq = spectrum(mats.Q);
    const auto ss = spectrum(mats.S);
    d.sigma_C = sc.extremes;
    d.sigma_T = st.extremes;
    d.sigma_Q = sq.extremes;
    d.sigma_S = ss.extremes;
    d.kappa_C = sc.kappa;
    d.kappa_T = st.kappa;
    d.rank_deficient_C = sc.rank_deficient;
    d.rank_deficient_T = st.rank_deficient;
    d.rank_deficient_Q = sq.rank_deficient;
    d.rank_deficient_S = ss.rank_deficient;
    d.degenerate = res.degenerate;

    const Eigen::Map<const Vector> x(res.x.entries.data(), res.x.entries.size());
    d.complex_data = has_imaginary_part(c.c) || has_imaginary_part(x);

    if (res.degenerate || sq.rank_deficient || ss.rank_deficient) {
        d.kappa_Q = kInf;
        d.kappa_S = kInf;
        d.forward = kInf;
        d.backward = kInf;
        return d;
    }
    d.kappa_Q = sq.kappa;
    d.kappa_S = ss.kappa;
    d.forward = st.rank_deficient ? kInf : numerics::spectral_norm(numerics::pinv(mats.T) * mats.Q);
    d.backward = numerics::spectral_norm(numerics::solve_lower_triangular(mats.Q, mats.T));
    return d;
}

bool SandwichReport::holds(double tol) const {
    for (std::size_t k = 0; k < kCount; ++k) {
        if (slack[k] < -tol * std::max(1.0, std::abs(rhs[k]))) {
            return false;
        }
    }
    return true;
}

double SandwichReport::worst_relative() const {
    double worst = kInf;
    for (std::size_t k = 0; k < kCount; ++k) {
        worst = std::min(worst, slack[k] / std::max(1.0, std::abs(rhs[k])));
    }
    return worst;
}

SandwichReport verify_norm_sandwiches(const TaylorCoefficients& c, const PadeResult& res) {
    if (res.degenerate) {
        throw DegenerateInput("norm sandwiches need a nondegenerate approximant");
    }
    const int m = res.m;
    const int n = res.n;
    const auto mats = structmat::build_all(c.coeffs(), res.x.p(), res.x.q());

    const double normC = numerics::spectral_norm(mats.C);
    const double normT = numerics::spectral_norm(mats.T);
    const double normQ = numerics::spectral_norm(mats.Q);
    const double normS = numerics::spectral_norm(mats.S);
    const double pinvT = numerics::pinv_norm(mats.T);
    const double pinvS = numerics::pinv_norm(mats.S);
    const double invQ = 1.0 / numerics::svd(mats.Q).smallest_row_rank();

    const double big = std::sqrt(static_cast<double>(m + n + 2));
    const double mid = std::sqrt(static_cast<double>(m + n + 1));

    SandwichReport rep;
    auto set = [&rep](std::size_t k, double lhs, double rhs) {
        rep.slack[k] = rhs - lhs;
        rep.rhs[k] = rhs;
    };
    set(0, std::max(1.0, normC), normT);
    set(1, normT, big);
    if (n > 0) {
        const double pinvC = numerics::pinv_norm(mats.C);
        set(2, pinvC, pinvT);
        set(3, pinvT, std::sqrt(2.0) * big * pinvC);
    } else {
        // C is empty: there is no C^+ to compare against.
        set(2, 0.0, kInf);
        set(3, 0.0, kInf);
    }
    set(4, normQ, mid);
    set(5, 1.0 / std::sqrt(2.0), normS);
    set(6, normS, mid);
    set(7, invQ, normT * pinvS);
    set(8, pinvT, normQ * pinvS);
    return rep;
}

}  // namespace padeguard::conditioning
