#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "padeguard/testfns.hpp"

namespace padeguard::sweep {

struct SweepRow {
    int n = 0;
    int m = 0;
    double kappa_C = 0;
    double kappa_T = 0;
    double kappa_Q = 0;
    double kappa_S = 0;
    double forward = 0;
    double backward = 0;
    double inv_froissart = 0;  // NaN when no pole lies in the closed disk
    double inv_residual = 0;   // NaN when no simple pole lies in the closed disk
    bool suspect = false;

    bool degenerate = false;
    int poles_in_open_disk = 0;
    double min_pole_modulus = 0;  // +inf without poles
    double froissart_bound = 0;
    double residual_bound = 0;
    bool certified_froissart = true;  // vacuous without in-disk poles
    bool certified_residual = true;
};

/// A row is suspect when the first-order error estimate forward * u reaches 1
/// (u the unit roundoff), or when the result is numerically degenerate.
bool rounding_dominated(double forward);

/// The subdiagonal [n-1|n] approximant of `c` and its diagnostics.
SweepRow sweep_row(const std::vector<Complex>& c, int n);

/// Worker count: PADE_GUARD_THREADS when set and positive, else the hardware count.
unsigned thread_count();

/// Rows n = 1..N of the subdiagonal sweep for a family, 2N coefficients.
/// Rows are computed in parallel and returned in order.
std::vector<SweepRow> run(testfns::SeriesKind family, int N, std::uint64_t seed = 0);

inline constexpr const char* kCsvHeader =
    "n,kappa_C,kappa_T,kappa_Q,kappa_S,forward,backward,inv_froissart,inv_residual,suspect";

/// %.17g, or an empty string for non-finite values.
std::string format_cell(double v);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace padeguard::sweep
