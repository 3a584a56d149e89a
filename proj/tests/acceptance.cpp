// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance [--cli <path to padeguard executable>]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "padeguard/conditioning.hpp"
#include "padeguard/ngcd.hpp"
#include "padeguard/numerics.hpp"
#include "padeguard/pade.hpp"
#include "padeguard/spurious.hpp"
#include "padeguard/structmat.hpp"
#include "padeguard/sweep.hpp"
#include "padeguard/testfns.hpp"
#include "support.hpp"

using namespace padeguard;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string cli_path;

constexpr std::array<std::uint64_t, 5> kF3Seeds = {7, 11, 23, 42, 101};

std::vector<sweep::SweepRow> f3_rows() {
    std::vector<sweep::SweepRow> all;
    for (auto seed : kF3Seeds) {
        const auto rows = sweep::run(testfns::SeriesKind::RandomNormal, 30, seed);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
}

bool in_disk(const sweep::SweepRow& r) { return !r.degenerate && r.poles_in_open_disk > 0 && std::isfinite(r.inv_froissart); }

Outcome order_condition() {
    support::Rng rng(1001);
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = rng.integer(0, 12);
        const int n = rng.integer(0, 12);
        const auto c = rng.unit_series(m + n + 1, trial % 2 == 1);
        const auto res = pade(c, m, n);
        worst = std::max(worst, support::order_defect(res.series.coeffs(), res.x.p(), res.x.q()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= 1e-9 && secs < 30.0, fmt("max defect %.3g, %.2f s for 500 instances", worst, secs)};
}

Outcome product_identity() {
    support::Rng rng(1002);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = rng.integer(0, 12);
        const int n = rng.integer(0, 12);
        const auto res = pade(rng.unit_series(m + n + 1, trial % 2 == 1), m, n);
        const Matrix T = structmat::build_T(res.series.coeffs(), m, n);
        const Matrix Q = structmat::build_Q(res.x.q(), m, n);
        const Matrix S = structmat::build_S(res.x.p(), res.x.q());
        const double err = numerics::spectral_norm(S - Q * T) / std::max(1.0, numerics::spectral_norm(S));
        worst = std::max(worst, err);
    }
    return {worst <= 1e-13, fmt("max relative |S - QT| %.3g", worst)};
}

Outcome sandwiches() {
    int checked = 0, skipped = 0;
    double worst = std::numeric_limits<double>::infinity();
    auto visit = [&](const std::vector<Complex>& c, int m, int n) {
        const auto res = pade(c, m, n);
        // Singular values below u * sigma_1 are noise; such rows are reported suspect.
        const auto d = conditioning::diagnostics(res);
        if (res.degenerate || !std::isfinite(d.kappa_S) || sweep::rounding_dominated(d.forward)) {
            ++skipped;
            return;
        }
        worst = std::min(worst, conditioning::verify_norm_sandwiches(res.series, res).worst_relative());
        ++checked;
    };
    support::Rng rng(1003);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = rng.integer(0, 12);
        const int n = rng.integer(0, 12);
        visit(rng.series(m + n + 1, trial % 2 == 1), m, n);
    }
    const auto f1 = testfns::taylor_f1(30);
    const auto f2 = testfns::taylor_f2(30);
    for (int n = 1; n <= 15; ++n) {
        visit(f1, n - 1, n);
        visit(f2, n - 1, n);
    }
    for (auto seed : kF3Seeds) {
        const auto f3 = testfns::taylor_f3(60, seed);
        for (int n = 1; n <= 30; ++n) {
            visit(f3, n - 1, n);
        }
    }
    return {worst >= -1e-10, fmt("worst relative slack %.3g over %d instances (%d degenerate or suspect skipped)", worst, checked,
                                    skipped)};
}

Outcome jacobian() {
    support::Rng rng(1004);
    int checked = 0;
    double worst = 0.0;
    for (int trial = 0; checked < 100 && trial < 2000; ++trial) {
        const int m = rng.integer(0, 8);
        const int n = rng.integer(0, 8);
        const auto c = rng.unit_series(m + n + 1, false);
        const auto res = pade(c, m, n);
        if (res.degenerate || numerics::cond(structmat::build_T(res.series.coeffs(), m, n)) > 1e4) {
            continue;
        }
        Vector d(m + n + 1);
        for (int j = 0; j <= m + n; ++j) {
            d(j) = rng.normal();
        }
        d.normalize();
        worst = std::max(worst, oracles::jacobian_check(c, m, n, d, 1e-6).relative_error);
        ++checked;
    }
    return {checked == 100 && worst <= 1e-4, fmt("max relative error %.3g over %d instances", worst, checked)};
}

Outcome pole_bounds(const std::vector<sweep::SweepRow>& rows) {
    int checked = 0, froissart_bad = 0, residual_bad = 0;
    double tightest = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        if (!in_disk(r)) {
            continue;
        }
        ++checked;
        const double observed = 1.0 / r.inv_froissart;
        if (observed < r.froissart_bound) ++froissart_bad;
        if (std::isfinite(r.inv_residual) && 1.0 / r.inv_residual < r.residual_bound) ++residual_bad;
        tightest = std::min(tightest, observed / r.froissart_bound);
    }
    return {checked > 0 && froissart_bad == 0 && residual_bad == 0,
            fmt("%d rows with poles in the disk, %d Froissart and %d residual violations, min observed/bound %.3g",
                checked, froissart_bad, residual_bad, tightest)};
}

Outcome correlation(const std::vector<sweep::SweepRow>& rows) {
    std::vector<double> lk, lf, lkr, lr;
    int small_T = 0, total = 0;
    for (const auto& r : rows) {
        if (!r.degenerate && std::isfinite(r.kappa_T)) {
            ++total;
            if (r.kappa_T <= 1e3) ++small_T;
        }
        if (!in_disk(r)) {
            continue;
        }
        lk.push_back(std::log10(r.kappa_S));
        lf.push_back(std::log10(r.inv_froissart));
        if (std::isfinite(r.inv_residual)) {
            lkr.push_back(std::log10(r.kappa_S));
            lr.push_back(std::log10(r.inv_residual));
        }
    }
    const double rf = oracles::pearson(lk, lf);
    const double rr = oracles::pearson(lkr, lr);
    const double frac = total ? static_cast<double>(small_T) / total : 0.0;
    return {rf >= 0.8 && rr >= 0.8 && frac >= 0.9,
            fmt("r(froissart)=%.3f r(residual)=%.3f over %zu rows, kappa(T) <= 1e3 on %.1f%%", rf, rr, lk.size(),
                100.0 * frac)};
}

Outcome no_spurious_poles() {
    double worst = std::numeric_limits<double>::infinity();
    auto check = [&](const std::vector<Complex>& c, int n) {
        const auto res = pade(c, n - 1, n);
        for (const auto& t : numerics::poly_roots(res.unscaled().q())) {
            worst = std::min(worst, std::abs(t));
        }
    };
    const auto f1 = testfns::taylor_f1(40);
    const auto f2 = testfns::taylor_f2(40);
    for (int n = 1; n <= 15; ++n) check(f1, n);
    for (int n = 1; n <= 10; ++n) check(f2, n);
    return {worst >= 1.0 - 1e-8, fmt("smallest pole modulus %.17g", worst)};
}

Outcome condition_relations(const std::vector<sweep::SweepRow>& f3) {
    std::vector<sweep::SweepRow> rows = f3;
    for (auto fam : {testfns::SeriesKind::StieltjesArcsine, testfns::SeriesKind::Exp}) {
        const auto extra = sweep::run(fam, 15);
        rows.insert(rows.end(), extra.begin(), extra.end());
    }
    int checked = 0, skipped = 0, bad = 0;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, growth = 0.0;
    for (const auto& r : rows) {
        if (r.suspect || !std::isfinite(r.kappa_S)) {
            ++skipped;
            continue;
        }
        ++checked;
        const double k = r.m + r.n + 2;
        const double ratio = r.kappa_C / r.kappa_T;
        const double g = std::max(r.kappa_Q, r.kappa_T) / (10.0 * (r.m + r.n + 1) * r.kappa_S);
        lo = std::min(lo, ratio * std::sqrt(2.0 * k));
        hi = std::max(hi, ratio / (10.0 * std::sqrt(k)));
        growth = std::max(growth, g);
        if (ratio * std::sqrt(2.0 * k) < 1.0 || ratio > 10.0 * std::sqrt(k) || g > 1.0) ++bad;
    }
    return {bad == 0 && checked > 0,
            fmt("%d rows (%d suspect skipped): ratio/low >= %.3g, ratio/high <= %.3g, growth <= %.3g", checked,
                skipped, lo, hi, growth)};
}

Outcome ngcd_checks() {
    auto unit = [](const Polynomial& p, const Polynomial& q) {
        const double s = 1.0 / std::hypot(p.norm(), q.norm());
        return std::pair{p * s, q * s};
    };
    support::Rng rng(1009);
    double gap = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto [p, q] = unit(rng.poly(rng.integer(0, 6), true), rng.poly(rng.integer(0, 6), true));
        gap = std::max(gap, std::abs(ngcd::epsilon_gcd(p, q).value - ngcd::epsilon_gcd_grid(p, q).value));
    }
    double margin = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 20; ++trial) {
        const Complex s(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
        const double delta = std::pow(10.0, rng.uniform(-6.0, -1.0));
        const Complex t = s + delta * std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
        std::vector<Complex> zs{s}, ps{t};
        for (int k = rng.integer(0, 3); k > 0; --k) zs.push_back(rng.scalar(true));
        for (int k = rng.integer(0, 3); k > 0; --k) ps.push_back(rng.scalar(true));
        const auto [p, q] = unit(support::from_roots(zs), support::from_roots(ps));
        margin = std::min(margin, ngcd::verify_ngcd_froissart(p, q));
    }
    return {gap <= 1e-6 && margin >= -1e-8,
            fmt("max |optimizer - grid| %.3g over 50 pairs, min doublet margin %.3g over 20", gap, margin)};
}

Outcome lookahead() {
    support::Rng rng(1010);
    int checked = 0, bad = 0;
    while (checked < 200) {
        const int m = rng.integer(1, 8);
        const int n = rng.integer(1, 8);
        const auto rep = ngcd::verify_lemma_CM(rng.series(m + n + 1, rng.integer(0, 1) == 1), m, n);
        if (!rep.conclusive) {
            continue;
        }
        ++checked;
        if (!rep.parts_hold() || !rep.column_below_kappa_BL()) ++bad;
    }
    const auto f2 = testfns::taylor_f2(40);
    int bracket_bad = 0;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const auto rep = ngcd::verify_lemma_CM(f2, n - 1, n);
        if (!rep.conclusive || !rep.ratio_in_bracket()) ++bracket_bad;
        lo = std::min(lo, rep.ratio);
        hi = std::max(hi, rep.ratio);
    }
    return {bad == 0 && bracket_bad == 0,
            fmt("%d/200 random series fail (i)-(iii); exp ratios in [%.3g, %.3g], %d outside the bracket", bad, lo,
                hi, bracket_bad)};
}

Outcome obstruction() {
    const auto c = testfns::taylor_f2(40);
    double th = std::numeric_limits<double>::infinity(), co = th;
    for (int n = 2; n <= 8; ++n) {
        const auto r = pade(c, n, n);
        const auto rt = pade(r.series.coeffs(), n - 1, n - 1, {1.0, false});
        const auto out = spurious::convergence_obstruction(r.rational(), rt.rational(),
                                                           metrics::DiskSampling::for_degrees(n, n), true);
        th = std::min(th, out.theorem_lhs / out.theorem_rhs);
        co = std::min(co, out.corollary_lhs);
    }
    return {th >= 0.9 && co >= 0.9, fmt("min theorem lhs/rhs %.3g, min corollary lhs %.3g", th, co)};
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    status = pclose(pipe);
    return out;
}

Outcome determinism() {
    auto csv = [] {
        std::ostringstream os;
        sweep::write_csv(os, sweep::run(testfns::SeriesKind::RandomNormal, 30, 7));
        return os.str();
    };
    setenv("PADE_GUARD_THREADS", "1", 1);
    const auto serial = csv();
    unsetenv("PADE_GUARD_THREADS");
    const auto a = csv();
    const auto b = csv();
    bool same = a == b && a == serial;
    std::string detail = fmt("in-process: %zu bytes, %s", a.size(), same ? "identical" : "differ");
    if (!cli_path.empty()) {
        const std::string cmd = "\"" + cli_path + "\" sweep --fn f3 --N 30 --seed 7";
        int s1 = 0, s2 = 0;
        const auto x = capture(cmd, s1);
        const auto y = capture(cmd, s2);
        const bool cli_same = s1 == 0 && s2 == 0 && x == y && x == a;
        same = same && cli_same;
        detail += fmt("; cli: %zu bytes, %s", x.size(), cli_same ? "identical" : "differ");
    }
    return {same, detail};
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
    }
    const auto f3 = f3_rows();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"order condition on random series", order_condition},
        {"S equals QT", product_identity},
        {"norm sandwiches", sandwiches},
        {"finite-difference Jacobian", jacobian},
        {"Froissart and residual bounds on f3", [&] { return pole_bounds(f3); }},
        {"pole metrics track kappa(S) on f3", [&] { return correlation(f3); }},
        {"no poles inside the disk for f1, f2", no_spurious_poles},
        {"kappa(C) vs kappa(T), kappa(Q) and kappa(T) vs kappa(S)", [&] { return condition_relations(f3); }},
        {"epsilon optimizer and doublet bound", ngcd_checks},
        {"look-ahead estimator", lookahead},
        {"exp diagonal convergence obstruction", obstruction},
        {"sweep output is deterministic", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
