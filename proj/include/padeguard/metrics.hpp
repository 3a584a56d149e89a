#pragma once

#include <vector>

#include "padeguard/polyrat.hpp"

namespace padeguard::metrics {

/// Chordal distance on the Riemann sphere, extended continuously to infinity.
/// Throws InvalidInput for an indeterminate argument.
double chordal(const ExtendedComplex& a, const ExtendedComplex& b);

/// chi(p1/q1, p2/q2) in homogeneous coordinates; NaN when a pair is (0, 0).
double chordal_homogeneous(Complex p1, Complex q1, Complex p2, Complex q2);

/// Sample set of the closed unit disk: the origin, `boundary_count` points on
/// |z| = 1, `interior_rings` circles of `ring_count` points at radii
/// k / (interior_rings + 1), and the `roots_of_unity_order`-th roots of unity.
struct DiskSampling {
    int boundary_count = 512;
    int interior_rings = 32;
    int ring_count = 128;
    int roots_of_unity_order = 0;

    /// Default density plus the (m+n+1)-th roots of unity.
    static DiskSampling for_degrees(int m, int n);

    std::vector<Complex> points() const;
    std::size_t total() const;
};

struct SampledChordal {
    double value = 0;      // max over samples: a lower bound on the true sup
    Complex argmax{};
    std::size_t evaluated = 0;
    std::size_t skipped = 0;  // indeterminate samples
};

SampledChordal chordal_metric_disk_sampled(const RationalFunction& r, const RationalFunction& rt,
                                           const DiskSampling& s);

inline double chordal_metric_disk(const RationalFunction& r, const RationalFunction& rt,
                                  const DiskSampling& s) {
    return chordal_metric_disk_sampled(r, rt, s).value;
}

/// min over unit phases a of ||x(r) - a x(rt)|| with both vectors of unit norm.
/// Unequal formal degrees are zero padded to (max m, max n) first.
double coefficient_distance(const RationalFunction& r, const RationalFunction& rt);

/// Unit-norm coefficient vectors of r and rt padded to common degrees, with the
/// phase of the second chosen to realize coefficient_distance.
std::pair<CoefficientVector, CoefficientVector> aligned_coefficients(const RationalFunction& r,
                                                                     const RationalFunction& rt);

/// |p'q - q'p| / (|p|^2 + |q|^2). Throws InvalidInput where p(z) = q(z) = 0.
double spherical_derivative(const RationalFunction& r, Complex z);

}  // namespace padeguard::metrics
