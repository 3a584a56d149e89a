#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "padeguard/polyrat.hpp"

namespace support {

using padeguard::Complex;
using padeguard::Polynomial;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    Complex scalar(bool complex) { return complex ? Complex(normal(), normal()) : Complex(normal(), 0.0); }

    std::vector<Complex> series(int count, bool complex) {
        std::vector<Complex> c(count);
        for (auto& v : c) {
            v = scalar(complex);
        }
        return c;
    }

    std::vector<Complex> unit_series(int count, bool complex) {
        auto c = series(count, complex);
        double s = 0.0;
        for (const auto& v : c) {
            s += std::norm(v);
        }
        for (auto& v : c) {
            v /= std::sqrt(s);
        }
        return c;
    }

    Polynomial poly(int degree, bool complex) { return Polynomial(series(degree + 1, complex)); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

/// Monic polynomial with the given roots, times `lead`.
inline Polynomial from_roots(const std::vector<Complex>& roots, Complex lead = 1.0) {
    std::vector<Complex> c{lead};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= r * c[j];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

/// Coefficients 0..count-1 of a * b by direct convolution.
inline std::vector<Complex> convolve(std::span<const Complex> a, std::span<const Complex> b, std::size_t count) {
    std::vector<Complex> out(count, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.size() && i < count; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < count; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// Largest modulus among the first m+n+1 coefficients of f q - p.
inline double order_defect(std::span<const Complex> c, const Polynomial& p, const Polynomial& q) {
    const std::size_t count = static_cast<std::size_t>(p.formal_degree() + q.formal_degree() + 1);
    const auto fq = convolve(c, q.coeffs(), count);
    double worst = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        const Complex pj = j < p.coeffs().size() ? p[j] : Complex{0.0, 0.0};
        worst = std::max(worst, std::abs(fq[j] - pj));
    }
    return worst;
}

}  // namespace support
