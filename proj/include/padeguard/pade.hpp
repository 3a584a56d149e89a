#pragma once

#include <span>
#include <vector>

#include "padeguard/polyrat.hpp"
#include "padeguard/types.hpp"

namespace padeguard {

/// Series coefficients after the substitution f(z) -> a f(b z).
struct TaylorCoefficients {
    std::vector<Complex> c;
    Complex scale_a{1.0, 0.0};
    Complex scale_b{1.0, 0.0};

    std::span<const Complex> coeffs() const { return c; }
    /// Euclidean norm of c_0..c_{m+n}.
    double window_norm(int m, int n) const;
};

struct ScalingOptions {
    /// Radius rescaling b; c_j is multiplied by b^j before normalization.
    Complex radius{1.0, 0.0};
    /// When false, scale_a = 1 and the series is used as given (after radius).
    bool normalize = true;
};

/// Applies a f(b z) with a = 1 / ||(c_0..c_{m+n})|| so that the first m+n+1
/// coefficients have unit norm. Throws InvalidInput on a short or all-zero window.
TaylorCoefficients scale_input(std::span<const Complex> c_raw, int m, int n,
                               const ScalingOptions& options = {});

struct DenominatorSolve {
    Vector q;             // unit norm
    double sigma_1 = 0;   // largest singular value of C (0 when n = 0)
    double sigma_n = 0;   // smallest of the n singular values (+inf when n = 0)
    double sigma_n1 = 0;  // ||C q||, the numerical sigma_{n+1}
    int nullity = 1;      // numerical kernel dimension
};

/// Kernel vector of the n x (n+1) Toeplitz matrix C from its SVD.
///
/// With a one dimensional numerical kernel this is the right singular vector of
/// the vanishing singular value. With a larger kernel the vector of lowest
/// degree in it is chosen, which is the reduced denominator of a Padé block.
DenominatorSolve pade_denominator(const Matrix& C);

/// p_j = sum_{k=0}^{min(j,n)} c_{j-k} q_k for j = 0..m.
Vector pade_numerator(std::span<const Complex> c, const Vector& q, int m, int n);

struct NormalizedVector {
    CoefficientVector x;
    /// q_0 vanished; the phase was fixed from the largest-modulus q entry instead.
    bool phase_from_largest = false;
};

/// Unit Euclidean norm with q_0 real positive.
NormalizedVector normalize(const Vector& x_raw, int m, int n);

/// Below these the tail of a denominator kernel counts as numerically zero.
inline constexpr double kNullityTol = 1e-13;

struct PadeResult {
    int m = 0;
    int n = 0;
    CoefficientVector x;
    TaylorCoefficients series;
    int defect = 0;
    bool degenerate = false;
    double common_root_distance = 0;  // min |zero - pole|, +inf without pairs
    double sigma_1 = 0;
    double sigma_n = 0;
    double sigma_n1 = 0;
    int nullity = 1;
    double order_residual = 0;  // ||T x||
    bool phase_from_largest = false;
    int reductions = 0;         // robust_pade: diagonal steps taken
    bool exhausted = false;     // robust_pade: terminal polynomial fallback

    /// The approximant of the scaled series a f(b z).
    RationalFunction rational() const { return x.rational(); }
    /// The same approximant for the series as given: p(z / b) / a over q(z / b).
    RationalFunction unscaled() const;
};

/// [m|n] Padé approximant of the (scaled) series, normalized so that
/// ||vec(p)||^2 + ||vec(q)||^2 = 1 and q(0) > 0. A common factor z^k is
/// cancelled so that q(0) != 0 whenever the denominator is not identically
/// shifted away.
PadeResult pade(std::span<const Complex> c_raw, int m, int n, const ScalingOptions& options = {});

/// Simplified robust Padé: walk down the diagonal (m-1, n-1) until
/// sigma_n(C) > tol * sigma_1(C) and the result is numerically nondegenerate.
/// When the walk runs out (m or n would go negative) the polynomial truncation
/// of degree max(m - n, 0) is returned with `exhausted` set.
PadeResult robust_pade(std::span<const Complex> c_raw, int m, int n, double tol,
                       const ScalingOptions& options = {});

}  // namespace padeguard
