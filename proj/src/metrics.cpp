#include "padeguard/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace padeguard::metrics {

double chordal(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_indeterminate() || b.is_indeterminate()) {
        throw InvalidInput("chordal distance of an indeterminate value");
    }
    if (a.is_infinite() && b.is_infinite()) {
        return 0.0;
    }
    if (a.is_infinite()) {
        return 1.0 / std::hypot(1.0, std::abs(b.value));
    }
    if (b.is_infinite()) {
        return 1.0 / std::hypot(1.0, std::abs(a.value));
    }
    return std::abs(a.value - b.value) / (std::hypot(1.0, std::abs(a.value)) *
                                          std::hypot(1.0, std::abs(b.value)));
}

double chordal_homogeneous(Complex p1, Complex q1, Complex p2, Complex q2) {
    const double n1 = std::hypot(std::abs(p1), std::abs(q1));
    const double n2 = std::hypot(std::abs(p2), std::abs(q2));
    if (n1 == 0.0 || n2 == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    // Normalize first so the cross product cannot overflow.
    p1 /= n1;
    q1 /= n1;
    p2 /= n2;
    q2 /= n2;
    return std::min(1.0, std::abs(p1 * q2 - p2 * q1));
}

DiskSampling DiskSampling::for_degrees(int m, int n) {
    DiskSampling s;
    s.roots_of_unity_order = m + n + 1;
    return s;
}

std::vector<Complex> DiskSampling::points() const {
    std::vector<Complex> pts;
    pts.reserve(total());
    pts.emplace_back(0.0, 0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 0; k < boundary_count; ++k) {
        pts.push_back(std::polar(1.0, two_pi * k / boundary_count));
    }
    for (int ring = 1; ring <= interior_rings; ++ring) {
        const double radius = static_cast<double>(ring) / (interior_rings + 1);
        for (int k = 0; k < ring_count; ++k) {
            pts.push_back(std::polar(radius, two_pi * k / ring_count));
        }
    }
    for (int k = 0; k < roots_of_unity_order; ++k) {
        pts.push_back(std::polar(1.0, two_pi * k / roots_of_unity_order));
    }
    return pts;
}

std::size_t DiskSampling::total() const {
    return 1 + static_cast<std::size_t>(boundary_count) +
           static_cast<std::size_t>(interior_rings) * static_cast<std::size_t>(ring_count) +
           static_cast<std::size_t>(roots_of_unity_order);
}

SampledChordal chordal_metric_disk_sampled(const RationalFunction& r, const RationalFunction& rt,
                                           const DiskSampling& s) {
    SampledChordal out;
    for (const Complex z : s.points()) {
        const double d = chordal_homogeneous(eval_poly(r.p(), z), eval_poly(r.q(), z),
                                             eval_poly(rt.p(), z), eval_poly(rt.q(), z));
        if (std::isnan(d)) {
            ++out.skipped;
            continue;
        }
        ++out.evaluated;
        if (d > out.value) {
            out.value = d;
            out.argmax = z;
        }
    }
    return out;
}

namespace {

CoefficientVector padded_unit(const RationalFunction& r, int m, int n) {
    CoefficientVector x;
    x.m = m;
    x.n = n;
    x.entries.resize(m + n + 2);
    x.entries << r.p().with_formal_degree(m).to_vector(), r.q().with_formal_degree(n).to_vector();
    x.entries.normalize();
    return x;
}

}  // namespace

std::pair<CoefficientVector, CoefficientVector> aligned_coefficients(const RationalFunction& r,
                                                                     const RationalFunction& rt) {
    const int m = std::max(r.m(), rt.m());
    const int n = std::max(r.n(), rt.n());
    auto x = padded_unit(r, m, n);
    auto xt = padded_unit(rt, m, n);
    const Complex inner = xt.entries.dot(x.entries);  // x(rt)^* x(r)
    if (std::abs(inner) > 0.0) {
        xt.entries *= inner / std::abs(inner);
    }
    return {x, xt};
}

double coefficient_distance(const RationalFunction& r, const RationalFunction& rt) {
    const auto [x, xt] = aligned_coefficients(r, rt);
    return (x.entries - xt.entries).norm();
}

double spherical_derivative(const RationalFunction& r, Complex z) {
    const Complex p = eval_poly(r.p(), z);
    const Complex q = eval_poly(r.q(), z);
    const double den = std::norm(p) + std::norm(q);
    if (den == 0.0) {
        throw InvalidInput("spherical derivative at a common zero of p and q");
    }
    const Complex dp = eval_poly(r.p().derivative(), z);
    const Complex dq = eval_poly(r.q().derivative(), z);
    return std::abs(dp * q - dq * p) / den;
}

}  // namespace padeguard::metrics
