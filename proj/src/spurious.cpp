#include "padeguard/spurious.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "padeguard/ngcd.hpp"
#include "padeguard/numerics.hpp"
#include "padeguard/structmat.hpp"

namespace padeguard {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Unit-norm copy of (p, q).
std::pair<Polynomial, Polynomial> unit_pair(const Polynomial& p, const Polynomial& q) {
    const double norm = std::hypot(p.norm(), q.norm());
    if (norm == 0.0) {
        throw InvalidInput("zero coefficient pair");
    }
    return {p * (1.0 / norm), q * (1.0 / norm)};
}

std::vector<Complex> numerical_roots(const Polynomial& p, double tol) {
    const int deg = p.degree(tol);
    if (deg <= 0) {
        return {};
    }
    std::vector<Complex> head(p.coeffs().begin(), p.coeffs().begin() + deg + 1);
    return numerics::poly_roots(Polynomial(std::move(head)));
}

double closest_pair(const std::vector<Complex>& zeros, const std::vector<Complex>& poles,
                    bool relative) {
    double best = kInf;
    for (const auto& s : zeros) {
        for (const auto& t : poles) {
            double d = std::abs(s - t);
            if (relative) {
                d /= std::max(1.0, std::abs(s));
            }
            best = std::min(best, d);
        }
    }
    return best;
}

}  // namespace

DegeneracyAssessment assess_degeneracy(const Polynomial& p_in, const Polynomial& q_in) {
    const auto [p, q] = unit_pair(p_in, q_in);
    DegeneracyAssessment out;
    const int dp = p.degree(kLeadingZeroTol);
    const int dq = q.degree(kLeadingZeroTol);
    out.defect = std::min(p.formal_degree() - dp, q.formal_degree() - dq);
    if (dp < 0) {
        // r = 0: gcd(0, q) = q.
        out.closest_pair = 0.0;
        out.common_root = dq > 0;
    } else {
        const auto zeros = numerical_roots(p, kLeadingZeroTol);
        const auto poles = numerical_roots(q, kLeadingZeroTol);
        out.closest_pair = closest_pair(zeros, poles, false);
        out.common_root = closest_pair(zeros, poles, true) < kCommonRootTol;
    }
    out.degenerate = out.defect > 0 || out.common_root;
    return out;
}

double sylvester_condition(const RationalFunction& r) {
    const auto [p, q] = unit_pair(r.p(), r.q());
    try {
        return numerics::cond(structmat::build_S(p, q));
    } catch (const RankDeficient&) {
        return kInf;
    }
}

}  // namespace padeguard

namespace padeguard::spurious {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PoleData {
    std::vector<Complex> zeros;
    std::vector<Complex> poles;
    std::vector<double> residuals;  // NaN for poles failing the simple-pole test
};

PoleData pole_data(const RationalFunction& r) {
    const auto [p, q] = unit_pair(r.p(), r.q());
    PoleData out;
    if (!p.is_zero()) {
        out.zeros = numerics::poly_roots(p);
    }
    out.poles = numerics::poly_roots(q);
    const Polynomial dq = q.derivative();
    for (std::size_t k = 0; k < out.poles.size(); ++k) {
        const Complex tau = out.poles[k];
        double gap = kInf;
        for (std::size_t j = 0; j < out.poles.size(); ++j) {
            if (j != k) {
                gap = std::min(gap, std::abs(out.poles[j] - tau));
            }
        }
        const Complex slope = eval_poly(dq, tau);
        if (gap > kSimplePoleSeparation && std::abs(slope) > kSimplePoleDerivative) {
            out.residuals.push_back(std::abs(eval_poly(p, tau) / slope));
        } else {
            out.residuals.push_back(std::numeric_limits<double>::quiet_NaN());
        }
    }
    return out;
}

double disk_doublet(const PoleData& d, bool zeros_in_disk) {
    double best = kInf;
    for (const auto& t : d.poles) {
        if (std::abs(t) > 1.0) {
            continue;
        }
        for (const auto& s : d.zeros) {
            if (zeros_in_disk && std::abs(s) > 1.0) {
                continue;
            }
            best = std::min(best, std::abs(s - t));
        }
    }
    return best;
}

double disk_residual(const PoleData& d) {
    double best = kInf;
    for (std::size_t k = 0; k < d.poles.size(); ++k) {
        if (std::abs(d.poles[k]) <= 1.0 && !std::isnan(d.residuals[k])) {
            best = std::min(best, d.residuals[k]);
        }
    }
    return best;
}

double power(double base, double e) { return std::pow(base, e); }

}  // namespace

double froissart_bound(int m, int n, double kappa_S) {
    const double N = m + n + 1;
    return 1.0 / (3.0 * std::sqrt(2.0) * power(N, 1.5) * kappa_S);
}

double residual_bound(int m, int n, double kappa_S) {
    const double N = m + n + 1;
    return 1.0 / (power(2.0 * N, 1.5) * kappa_S);
}

SpuriousReport spurious_report(const RationalFunction& r, double kappa_S) {
    if (!std::isfinite(kappa_S)) {
        throw DegenerateInput("spurious report needs a nondegenerate function (finite kappa(S))");
    }
    const auto data = pole_data(r);
    SpuriousReport rep;
    rep.zeros = data.zeros;
    rep.poles = data.poles;
    rep.kappa_S = kappa_S;
    rep.froissart = kInf;
    rep.froissart_open = kInf;
    rep.min_residual = kInf;
    rep.min_residual_open = kInf;
    for (std::size_t k = 0; k < data.poles.size(); ++k) {
        const Complex tau = data.poles[k];
        const double mod = std::abs(tau);
        if (mod > 1.0) {
            continue;
        }
        const bool open = mod < 1.0;
        ++rep.poles_in_closed_disk;
        rep.poles_in_open_disk += open ? 1 : 0;
        for (const auto& s : data.zeros) {
            const double d = std::abs(s - tau);
            rep.froissart = std::min(rep.froissart, d);
            if (open) {
                rep.froissart_open = std::min(rep.froissart_open, d);
            }
        }
        if (std::isnan(data.residuals[k])) {
            rep.multiple_pole = true;
            continue;
        }
        rep.min_residual = std::min(rep.min_residual, data.residuals[k]);
        if (open) {
            rep.min_residual_open = std::min(rep.min_residual_open, data.residuals[k]);
        }
    }
    rep.bound_froissart = froissart_bound(r.m(), r.n(), kappa_S);
    rep.bound_residual = residual_bound(r.m(), r.n(), kappa_S);
    rep.certified_froissart = rep.froissart >= rep.bound_froissart;
    rep.certified_residual = rep.min_residual >= rep.bound_residual;
    return rep;
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Certified: return "certified";
        case CertificateStatus::Violated: return "violated";
        case CertificateStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

bool numerically_degenerate(const RationalFunction& r, double kappa_S) {
    return !std::isfinite(kappa_S) || assess_degeneracy(r.p(), r.q()).degenerate;
}

void settle(Certificate& cert) {
    if (!cert.hypothesis) {
        cert.status = CertificateStatus::Inconclusive;
    } else {
        cert.status = cert.observed >= cert.bound ? CertificateStatus::Certified
                                                  : CertificateStatus::Violated;
    }
}

}  // namespace

Certificate certify_froissart(const RationalFunction& r, const RationalFunction& rt, double chi) {
    Certificate cert;
    cert.kappa_S = sylvester_condition(r);
    cert.hypothesis_value = chi;
    cert.trigger = "chi";
    if (numerically_degenerate(r, cert.kappa_S)) {
        cert.trigger = "degenerate";
        return cert;
    }
    cert.bound = froissart_bound(r.m(), r.n(), cert.kappa_S);
    cert.hypothesis = chi <= 1.0 / 3.0;
    cert.observed = disk_doublet(pole_data(rt), true);
    settle(cert);
    return cert;
}

Certificate certify_residuals(const RationalFunction& r, const RationalFunction& rt, double chi) {
    Certificate cert;
    cert.kappa_S = sylvester_condition(r);
    if (numerically_degenerate(r, cert.kappa_S)) {
        cert.trigger = "degenerate";
        return cert;
    }
    const double N = r.m() + r.n() + 1;
    const double via_chi = 2.0 * N * N * cert.kappa_S * cert.kappa_S * chi;
    const double via_distance =
        std::sqrt(2.0 * N) * metrics::coefficient_distance(r, rt) * cert.kappa_S;
    cert.bound = residual_bound(r.m(), r.n(), cert.kappa_S);
    if (via_chi <= 1.0 / 3.0) {
        cert.hypothesis = true;
        cert.hypothesis_value = via_chi;
        cert.trigger = "chi";
    } else if (via_distance <= 1.0 / 3.0) {
        cert.hypothesis = true;
        cert.hypothesis_value = via_distance;
        cert.trigger = "distance";
    } else {
        cert.hypothesis_value = std::min(via_chi, via_distance);
        cert.trigger = "none";
    }
    cert.observed = disk_residual(pole_data(rt));
    settle(cert);
    return cert;
}

NeighborhoodResult neighborhood_conditioning(const RationalFunction& r, const RationalFunction& rt) {
    NeighborhoodResult out;
    out.kappa_S = sylvester_condition(r);
    if (!std::isfinite(out.kappa_S)) {
        throw DegenerateInput("neighborhood conditioning needs a nondegenerate r");
    }
    const double N = r.m() + r.n() + 1;
    out.distance = metrics::coefficient_distance(r, rt);
    out.hypothesis_value = std::sqrt(2.0 * N) * out.distance * out.kappa_S;
    out.hypothesis = out.hypothesis_value <= 1.0 / 3.0;
    const RationalFunction padded(rt.p().with_formal_degree(r.m()), rt.q().with_formal_degree(r.n()));
    out.kappa_S_tilde = sylvester_condition(padded);
    out.guarantee_holds = out.kappa_S_tilde <= 2.0 * out.kappa_S;
    out.rt_degenerate = assess_degeneracy(padded.p(), padded.q()).degenerate;
    out.contrapositive_holds = out.hypothesis_value >= 1.0;
    return out;
}

ObstructionMargins convergence_obstruction(const RationalFunction& r, const RationalFunction& rt,
                                           const metrics::DiskSampling& sampling, bool pade_pair) {
    const int m = r.m();
    const int n = r.n();
    if (m < 1 || n < 1 || rt.m() != m - 1 || rt.n() != n - 1) {
        throw InvalidInput("convergence obstruction compares R_{m,n} with R_{m-1,n-1}, m, n >= 1");
    }
    ObstructionMargins out;
    out.kappa_S = sylvester_condition(r);
    if (!std::isfinite(out.kappa_S)) {
        throw DegenerateInput("convergence obstruction needs a nondegenerate r");
    }
    const double N = m + n + 1;
    out.chi = metrics::chordal_metric_disk(r, rt, sampling);
    out.theorem_lhs = 2.0 * out.chi * out.kappa_S * out.kappa_S;
    out.theorem_rhs = 1.0 / (N * N);

    out.pade_pair = pade_pair;
    if (!pade_pair) {
        return out;
    }
    const auto [p, q] = unit_pair(r.p(), r.q());
    const Matrix square = structmat::build_square_sylvester(p, q);
    try {
        out.kappa_square = numerics::cond(square);
    } catch (const RankDeficient&) {
        out.kappa_square = kInf;
    }
    out.kappa_BL = ngcd::kappa_BL(square).value;
    out.corollary_lhs = 2.0 * std::pow(N, 1.5) * out.kappa_square * out.chi;
    out.lemma_kappa = std::min(2.0 * std::pow(N, 1.5) * out.kappa_square, N * N * out.kappa_BL);

    out.lemma_min_margin = kInf;
    for (const Complex z : sampling.points()) {
        const double c = metrics::chordal_homogeneous(eval_poly(r.p(), z), eval_poly(r.q(), z),
                                                      eval_poly(rt.p(), z), eval_poly(rt.q(), z));
        if (std::isnan(c)) {
            continue;
        }
        const double margin = out.lemma_kappa * c - std::pow(std::abs(z), m + n - 1);
        out.lemma_min_margin = std::min(out.lemma_min_margin, margin);
    }
    return out;
}

}  // namespace padeguard::spurious
