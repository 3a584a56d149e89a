#include "padeguard/testfns.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace padeguard::testfns {

std::vector<Complex> taylor_f1(int count) {
    if (count < 1) {
        throw InvalidInput("taylor_f1: count must be positive");
    }
    std::vector<Complex> c(count, Complex{0.0, 0.0});
    double even = std::numbers::pi;
    for (int j = 0; j < count; j += 2) {
        c[j] = even;
        const int k = j / 2;
        even *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
    }
    return c;
}

double f1_moment_quadrature(int j, double tol) {
    if (j < 0) {
        throw InvalidInput("moment index must be nonnegative");
    }
    // The N-point rule is exact for polynomial degree < 2N.
    auto rule = [j](int nodes) {
        double sum = 0.0;
        for (int k = 1; k <= nodes; ++k) {
            sum += std::pow(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * nodes)), j);
        }
        return std::numbers::pi * sum / nodes;
    };
    int nodes = 2;
    double prev = rule(nodes);
    for (int round = 0; round < 20; ++round) {
        nodes *= 2;
        const double next = rule(nodes);
        if (std::abs(next - prev) <= tol * std::max(1.0, std::abs(next))) {
            return next;
        }
        prev = next;
    }
    return prev;
}

std::vector<Complex> taylor_f2(int count) {
    if (count < 1) {
        throw InvalidInput("taylor_f2: count must be positive");
    }
    std::vector<Complex> c(count);
    double term = 1.0;
    for (int j = 0; j < count; ++j) {
        c[j] = term;
        term /= j + 1;
    }
    return c;
}

std::vector<Complex> taylor_f3(int count, std::uint64_t seed) {
    if (count < 1) {
        throw InvalidInput("taylor_f3: count must be positive");
    }
    std::mt19937_64 engine(seed);
    auto uniform = [&engine] { return static_cast<double>((engine() >> 11) + 1) * 0x1.0p-53; };
    std::vector<Complex> c;
    c.reserve(count + 1);
    while (static_cast<int>(c.size()) < count) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        c.emplace_back(radius * std::cos(angle));
        c.emplace_back(radius * std::sin(angle));
    }
    c.resize(count);
    return c;
}

std::vector<Complex> generate(const SeriesSpec& spec) {
    switch (spec.kind) {
        case SeriesKind::StieltjesArcsine: return taylor_f1(spec.length);
        case SeriesKind::Exp: return taylor_f2(spec.length);
        case SeriesKind::RandomNormal: return taylor_f3(spec.length, spec.seed);
        case SeriesKind::PlantedRational:
            if (!spec.payload) {
                throw InvalidInput("planted series needs a rational payload");
            }
            return taylor_of_rational(*spec.payload, spec.length);
    }
    throw InvalidInput("unknown series kind");
}

SeriesKind parse_family(const std::string& name) {
    if (name == "f1" || name == "stieltjes_arcsine") return SeriesKind::StieltjesArcsine;
    if (name == "f2" || name == "exp") return SeriesKind::Exp;
    if (name == "f3" || name == "random_normal") return SeriesKind::RandomNormal;
    throw InvalidInput("unknown family '" + name + "' (expected f1, f2 or f3)");
}

std::string family_name(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::StieltjesArcsine: return "f1";
        case SeriesKind::Exp: return "f2";
        case SeriesKind::RandomNormal: return "f3";
        case SeriesKind::PlantedRational: return "planted";
    }
    return "unknown";
}

}  // namespace padeguard::testfns
