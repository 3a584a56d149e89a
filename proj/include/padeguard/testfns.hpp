#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padeguard/polyrat.hpp"

namespace padeguard::testfns {

/// Moments of the arcsine weight, c_j = int_{-1}^{1} x^j (1 - x^2)^{-1/2} dx.
/// Closed form pi binom(2k, k) / 4^k for j = 2k, zero for odd j.
std::vector<Complex> taylor_f1(int count);

/// The same moment by Gauss-Chebyshev quadrature, doubling the node count
/// until two consecutive rules agree to `tol`.
double f1_moment_quadrature(int j, double tol = 1e-15);

/// c_j = 1 / j!.
std::vector<Complex> taylor_f2(int count);

/// Real standard normal draws. Generator version 1: std::mt19937_64 seeded
/// with `seed`, uniforms u = (k + 1) 2^-53 from the top 53 bits of each word,
/// Box-Muller pairs (sqrt(-2 ln u1) cos(2 pi u2), sqrt(-2 ln u1) sin(2 pi u2)).
std::vector<Complex> taylor_f3(int count, std::uint64_t seed);

inline constexpr int kNormalGeneratorVersion = 1;

enum class SeriesKind { StieltjesArcsine, Exp, RandomNormal, PlantedRational };

struct SeriesSpec {
    SeriesKind kind = SeriesKind::Exp;
    int length = 1;
    std::uint64_t seed = 0;
    std::optional<RationalFunction> payload;  // PlantedRational only
};

std::vector<Complex> generate(const SeriesSpec& spec);

/// "f1" / "f2" / "f3" and the long names; throws InvalidInput otherwise.
SeriesKind parse_family(const std::string& name);
std::string family_name(SeriesKind kind);

}  // namespace padeguard::testfns
