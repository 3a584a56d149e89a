#pragma once

#include <array>
#include <string_view>

#include "padeguard/pade.hpp"
#include "padeguard/structmat.hpp"

namespace padeguard::conditioning {

struct SingularExtremes {
    double largest = 0;
    double smallest = 0;  // sigma_l, l = rows
};

/// Condition numbers of the four structured matrices and the two
/// conditioning numbers of the real Padé map. Undefined values are +inf with
/// the matching flag set; nothing here throws on rank deficiency.
struct Diagnostics {
    double kappa_C = 0;
    double kappa_T = 0;
    double kappa_Q = 0;
    double kappa_S = 0;
    double forward = 0;   // ||T^+ Q||
    double backward = 0;  // ||Q^{-1} T||

    SingularExtremes sigma_C;
    SingularExtremes sigma_T;
    SingularExtremes sigma_Q;
    SingularExtremes sigma_S;

    bool rank_deficient_C = false;
    bool rank_deficient_T = false;
    bool rank_deficient_Q = false;
    bool rank_deficient_S = false;
    bool degenerate = false;
    /// The conditioning theory covers the real map only.
    bool complex_data = false;
};

Diagnostics diagnostics(const TaylorCoefficients& c, const PadeResult& res);

/// Diagnostics for the result's own scaled series.
inline Diagnostics diagnostics(const PadeResult& res) { return diagnostics(res.series, res); }

/// Slack (right side minus left side) of each norm inequality relating C, T, Q, S.
struct SandwichReport {
    static constexpr std::size_t kCount = 9;
    static constexpr std::array<std::string_view, kCount> kNames = {
        "max(1,|C|) <= |T|",
        "|T| <= sqrt(m+n+2)",
        "|C^+| <= |T^+|",
        "|T^+| <= sqrt(2(m+n+2)) |C^+|",
        "|Q| <= sqrt(m+n+1)",
        "1/sqrt(2) <= |S|",
        "|S| <= sqrt(m+n+1)",
        "|Q^-1| <= |T| |S^+|",
        "|T^+| <= |Q| |S^+|",
    };

    std::array<double, kCount> slack{};
    std::array<double, kCount> rhs{};

    /// Every slack >= -tol * max(1, |rhs|).
    bool holds(double tol = 1e-10) const;
    double worst_relative() const;
};

/// Requires a nondegenerate result (throws DegenerateInput otherwise), a
/// scaled series and a normalized coefficient vector.
SandwichReport verify_norm_sandwiches(const TaylorCoefficients& c, const PadeResult& res);

}  // namespace padeguard::conditioning
