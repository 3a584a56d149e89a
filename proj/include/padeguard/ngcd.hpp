#pragma once

#include <span>

#include "padeguard/pade.hpp"
#include "padeguard/polyrat.hpp"

namespace padeguard::ngcd {

struct EpsilonGcd {
    double value = 0;
    ExtendedComplex argmin;
};

/// The objective sqrt(|p|^2 / sum|z|^{2j} + |q|^2 / sum|z|^{2j}) at z.
/// At infinity it is sqrt(|p_m|^2 + |q_n|^2).
double epsilon_objective(const Polynomial& p, const Polynomial& q, const ExtendedComplex& z);

/// Distance of (p, q) to the nearest pair with a common root on the sphere.
/// Polar grids on |z| <= 2 and |w| <= 1 (w = 1/z), then simplex refinement.
/// The caller normalizes the coefficients; the value depends on it.
EpsilonGcd epsilon_gcd(const Polynomial& p, const Polynomial& q);

/// Brute force reference: dense polar grids on both charts followed by
/// repeated local Cartesian zooms. Slow.
EpsilonGcd epsilon_gcd_grid(const Polynomial& p, const Polynomial& q, int grid = 1000);

struct KappaBL {
    double value = 0;  // +inf when singular
    bool singular = false;
};

/// max(||S^-1 e_1||, ||S^-1 e_{m+n}||) for a square Sylvester matrix S.
KappaBL kappa_BL(const Matrix& square_sylvester);

struct KappaCM {
    double kappa_CM = 0;  // 1 / |q(0) e~|, +inf when the square block is singular
    Complex q0;
    Complex e_tilde;
    Vector q;        // unit-norm [m|n] denominator
    Vector q_tilde;  // unit-norm [m-1|n-1] denominator
    bool singular = false;
};

/// Look-ahead estimator built from the square Toeplitz block (columns 2..n+1)
/// of C. The series is scaled as for pade(); requires n >= 1.
KappaCM kappa_CM(std::span<const Complex> c_raw, int m, int n);

struct LemmaCMReport {
    bool conclusive = false;
    double kappa_CM = 0;
    double inv_block_norm = 0;  // ||C_^-1||
    double margin_lower = 0;    // kappa_CM - ||C_^-1|| / n
    double margin_upper = 0;    // sqrt(n) ||C_^-1||^2 - kappa_CM
    double margin_sigma = 0;    // sigma_n(C) - 1 / (n kappa_CM)

    double sylvester_column = 0;  // ||S_^-1 e_{m+n}||, S_ from the unit-norm x(r)
    double kappa_BL = 0;
    double ratio = 0;             // kappa_CM / sylvester_column
    double bracket_low = 0;       // 1 / (2 + sqrt(m+n+2))
    double bracket_high = 0;      // 2 + sqrt(m+n+2)
    /// kappa_CM / ||S_^-1 e_{m+n}|| with S_ built from the unit-norm q, against 1 / ||x(rt)||.
    double identity_error = 0;

    bool parts_hold(double tol = 1e-8) const;
    bool ratio_in_bracket() const { return ratio >= bracket_low && ratio <= bracket_high; }
    bool column_below_kappa_BL() const;
};

/// Margins of the four look-ahead inequalities. Inconclusive (conclusive =
/// false) when the [m|n] approximant is degenerate or the block is singular.
LemmaCMReport verify_lemma_CM(std::span<const Complex> c_raw, int m, int n);

/// min over zeros s and poles t in the closed disk of min(m,n) |s - t| - eps(p, q),
/// with (p, q) scaled to unit norm. +inf when no such pair exists.
double verify_ngcd_froissart(const Polynomial& p, const Polynomial& q);

struct NgcdResult {
    double epsilon = 0;
    ExtendedComplex argmin_z;
    double kappa_BL = 0;
    double kappa_CM = 0;
    Complex e_tilde;
    Complex q0;
};

/// epsilon, kappa_BL and kappa_CM of the [m|n] approximant of a series.
NgcdResult analyze(std::span<const Complex> c_raw, int m, int n);

}  // namespace padeguard::ngcd
