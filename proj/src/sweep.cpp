#include "padeguard/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>

#include "padeguard/conditioning.hpp"
#include "padeguard/numerics.hpp"
#include "padeguard/pade.hpp"
#include "padeguard/spurious.hpp"

namespace padeguard::sweep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double reciprocal(double v) { return std::isfinite(v) ? 1.0 / v : kNaN; }

}  // namespace

bool rounding_dominated(double forward) {
    constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2.0;
    return !(forward * unit_roundoff < 1.0);
}

SweepRow sweep_row(const std::vector<Complex>& c, int n) {
    SweepRow row;
    row.n = n;
    row.m = n - 1;
    const auto res = pade(c, row.m, n);
    const auto d = conditioning::diagnostics(res);
    row.kappa_C = d.kappa_C;
    row.kappa_T = d.kappa_T;
    row.kappa_Q = d.kappa_Q;
    row.kappa_S = d.kappa_S;
    row.forward = d.forward;
    row.backward = d.backward;
    row.degenerate = res.degenerate || !std::isfinite(d.kappa_S);
    row.suspect = row.degenerate || rounding_dominated(d.forward);
    row.inv_froissart = kNaN;
    row.inv_residual = kNaN;
    row.min_pole_modulus = kInf;

    const auto r = res.rational();
    const auto poles = numerics::poly_roots(r.q());
    for (const auto& t : poles) {
        row.min_pole_modulus = std::min(row.min_pole_modulus, std::abs(t));
        row.poles_in_open_disk += std::abs(t) < 1.0 ? 1 : 0;
    }
    if (row.degenerate) {
        return row;
    }
    const auto rep = spurious::spurious_report(r, d.kappa_S);
    row.inv_froissart = reciprocal(rep.froissart);
    row.inv_residual = reciprocal(rep.min_residual);
    row.froissart_bound = rep.bound_froissart;
    row.residual_bound = rep.bound_residual;
    row.certified_froissart = rep.certified_froissart;
    row.certified_residual = rep.certified_residual;
    return row;
}

unsigned thread_count() {
    if (const char* env = std::getenv("PADE_GUARD_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run(testfns::SeriesKind family, int N, std::uint64_t seed) {
    if (N < 1) {
        throw InvalidInput("sweep needs N >= 1");
    }
    const auto c = testfns::generate({family, 2 * N, seed, std::nullopt});
    std::vector<SweepRow> rows(N);
    std::vector<std::exception_ptr> errors(N);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int k = next++; k < N; k = next++) {
            try {
                rows[k] = sweep_row(c, k + 1);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(N));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) {
            pool.emplace_back(work);
        }
        work();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

std::string format_cell(double v) {
    if (!std::isfinite(v)) {
        return {};
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << format_cell(r.kappa_C) << ',' << format_cell(r.kappa_T) << ','
            << format_cell(r.kappa_Q) << ',' << format_cell(r.kappa_S) << ','
            << format_cell(r.forward) << ',' << format_cell(r.backward) << ','
            << format_cell(r.inv_froissart) << ',' << format_cell(r.inv_residual) << ','
            << (r.suspect ? 1 : 0) << '\n';
    }
}

}  // namespace padeguard::sweep
