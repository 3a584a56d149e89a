#pragma once

#include <string>
#include <vector>

#include "padeguard/metrics.hpp"
#include "padeguard/polyrat.hpp"

namespace padeguard {

/// Leading coefficients of a unit-norm coefficient vector below this are zero.
inline constexpr double kLeadingZeroTol = 1e-12;
/// A zero sigma and a pole tau with |sigma - tau| < tol * max(1, |sigma|) are a common root.
inline constexpr double kCommonRootTol = 1e-8;
/// A pole is simple when its distance to every other pole exceeds this...
inline constexpr double kSimplePoleSeparation = 1e-8;
/// ...and |q'(tau)| (unit-norm coefficients) exceeds this.
inline constexpr double kSimplePoleDerivative = 1e-12;

struct DegeneracyAssessment {
    int defect = 0;
    double closest_pair = 0;  // min |zero - pole|, +inf without pairs
    bool common_root = false;
    bool degenerate = false;
};

/// Numerical version of "p, q not coprime or both leading coefficients zero".
/// Works on the jointly normalized pair.
DegeneracyAssessment assess_degeneracy(const Polynomial& p, const Polynomial& q);

/// kappa(S) for the unit-norm coefficient vector of r; +inf when S is rank deficient.
double sylvester_condition(const RationalFunction& r);

}  // namespace padeguard

namespace padeguard::spurious {

struct SpuriousReport {
    std::vector<Complex> zeros;
    std::vector<Complex> poles;

    // Minima over poles with |tau| <= 1 (closed) or |tau| < 1 (open); +inf if none.
    double froissart = 0;
    double froissart_open = 0;
    double min_residual = 0;
    double min_residual_open = 0;

    double kappa_S = 0;
    double bound_froissart = 0;  // 1 / (3 sqrt2 (m+n+1)^{3/2} kappa(S))
    double bound_residual = 0;   // 1 / ((2 (m+n+1))^{3/2} kappa(S))
    bool certified_froissart = false;
    bool certified_residual = false;

    int poles_in_closed_disk = 0;
    int poles_in_open_disk = 0;
    /// A pole in the closed disk failed the simple-pole test and was skipped.
    bool multiple_pole = false;
};

double froissart_bound(int m, int n, double kappa_S);
double residual_bound(int m, int n, double kappa_S);

/// Zero/pole extraction and the doublet and residual minima of r.
/// Throws DegenerateInput when kappa_S is not finite.
SpuriousReport spurious_report(const RationalFunction& r, double kappa_S);

enum class CertificateStatus { Certified, Violated, Inconclusive };

std::string to_string(CertificateStatus s);

struct Certificate {
    CertificateStatus status = CertificateStatus::Inconclusive;
    bool hypothesis = false;
    double hypothesis_value = 0;  // the quantity compared against 1/3
    double bound = 0;
    double observed = 0;          // +inf when nothing was observed in the disk
    double kappa_S = 0;
    std::string trigger;          // which hypothesis fired
};

/// Zero-pole separation of rt in the closed disk, given chi >= chi_D(r, rt).
/// The hypothesis is chi <= 1/3; rt = r with chi = 0 certifies r itself.
Certificate certify_froissart(const RationalFunction& r, const RationalFunction& rt, double chi);

/// Residual moduli of simple poles of rt in the closed disk. Either
/// 2 (m+n+1)^2 kappa(S)^2 chi <= 1/3 or sqrt(2(m+n+1)) d(r, rt) kappa(S) <= 1/3 triggers.
Certificate certify_residuals(const RationalFunction& r, const RationalFunction& rt, double chi);

struct NeighborhoodResult {
    double distance = 0;          // d(r, rt)
    double hypothesis_value = 0;  // sqrt(2(m+n+1)) d kappa(S)
    bool hypothesis = false;      // value <= 1/3
    double kappa_S = 0;
    double kappa_S_tilde = 0;
    bool guarantee_holds = false;  // kappa_S_tilde <= 2 kappa_S (when hypothesis)
    bool rt_degenerate = false;
    bool contrapositive_holds = false;  // value >= 1 (when rt degenerate)
};

NeighborhoodResult neighborhood_conditioning(const RationalFunction& r, const RationalFunction& rt);

struct ObstructionMargins {
    double chi = 0;  // sampled chi_D(r, rt)
    double kappa_S = 0;
    double theorem_lhs = 0;  // 2 chi kappa(S)^2
    double theorem_rhs = 0;  // (m+n+1)^{-2}

    bool pade_pair = false;  // the remaining fields are only filled for Padé pairs
    double kappa_square = 0;   // kappa of the square Sylvester matrix
    double kappa_BL = 0;
    double corollary_lhs = 0;  // 2 (m+n+1)^{3/2} kappa(S_) chi, compared with 1
    double lemma_kappa = 0;    // min(2 (m+n+1)^{3/2} kappa(S_), (m+n+1)^2 kappa_BL)
    double lemma_min_margin = 0;  // min_z kappa chi(r(z), rt(z)) - |z|^{m+n-1}

    double theorem_margin() const { return theorem_lhs - theorem_rhs; }
    double corollary_margin() const { return corollary_lhs - 1.0; }
};

/// Lower bounds on chi_D(r, rt) for r in R_{m,n} and rt in R_{m-1,n-1}.
/// `pade_pair` asserts r, rt are the [m|n], [m-1|n-1] approximants of one series.
ObstructionMargins convergence_obstruction(const RationalFunction& r, const RationalFunction& rt,
                                           const metrics::DiskSampling& sampling, bool pade_pair);

}  // namespace padeguard::spurious
