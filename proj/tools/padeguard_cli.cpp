#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_io.hpp"
#include "padeguard/conditioning.hpp"
#include "padeguard/ngcd.hpp"
#include "padeguard/pade.hpp"
#include "padeguard/spurious.hpp"
#include "padeguard/sweep.hpp"
#include "padeguard/testfns.hpp"

using namespace padeguard;
using cli::Json;

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int m = 0;
    int n = 0;
    std::optional<double> robust;
    std::string fn;
    std::uint64_t seed = 0;
    std::string coeffs;
    std::string out;
    std::string format;
    int N = 0;
};

std::vector<Complex> load_series(const Options& o) {
    if (o.fn.empty() == o.coeffs.empty()) {
        throw UsageError("give exactly one of --fn and --coeffs");
    }
    if (!o.coeffs.empty()) {
        return cli::read_coefficients(o.coeffs);
    }
    testfns::SeriesSpec spec;
    spec.kind = testfns::parse_family(o.fn);
    spec.length = o.m + o.n + 1;
    spec.seed = o.seed;
    return testfns::generate(spec);
}

PadeResult approximant(const std::vector<Complex>& c, const Options& o) {
    return o.robust ? robust_pade(c, o.m, o.n, *o.robust) : pade(c, o.m, o.n);
}

std::string pick_format(const Options& o, std::initializer_list<const char*> allowed) {
    const std::string f = o.format.empty() ? *allowed.begin() : o.format;
    for (const char* a : allowed) {
        if (f == a) return f;
    }
    throw UsageError("format `" + f + "` is not available for this command");
}

std::string polynomial_text(const Polynomial& p) {
    std::string s;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        s += "  " + std::to_string(j) + "  " + cli::text(p[j]) + "\n";
    }
    return s;
}

// approximate

int cmd_approximate(const Options& o) {
    const auto format = pick_format(o, {"text", "json"});
    const auto c = load_series(o);
    const auto res = approximant(c, o);
    const auto r = res.unscaled();

    if (format == "json") {
        Json doc;
        doc["m"] = res.m;
        doc["n"] = res.n;
        doc["p"] = cli::coefficients(r.p());
        doc["q"] = cli::coefficients(r.q());
        doc["scaled"] = {{"p", cli::coefficients(res.x.p())}, {"q", cli::coefficients(res.x.q())}};
        doc["scale_a"] = cli::complex(res.series.scale_a);
        doc["scale_b"] = cli::complex(res.series.scale_b);
        doc["defect"] = res.defect;
        doc["degenerate"] = res.degenerate;
        doc["sigma_1"] = cli::number(res.sigma_1);
        doc["sigma_n"] = cli::number(res.sigma_n);
        doc["sigma_n1"] = cli::number(res.sigma_n1);
        doc["nullity"] = res.nullity;
        doc["order_residual"] = cli::number(res.order_residual);
        if (o.robust) {
            doc["robust"] = {{"tol", *o.robust}, {"reductions", res.reductions}, {"exhausted", res.exhausted}};
        }
        cli::write_output(o.out, doc.dump(2) + "\n");
        return 0;
    }

    std::ostringstream os;
    os << "[" << res.m << "|" << res.n << "] approximant";
    if (o.robust) os << " (robust, " << res.reductions << " reductions" << (res.exhausted ? ", exhausted" : "") << ")";
    os << "\np:\n" << polynomial_text(r.p()) << "q:\n" << polynomial_text(r.q());
    os << "scale a: " << cli::text(res.series.scale_a) << "\n";
    os << "scale b: " << cli::text(res.series.scale_b) << "\n";
    os << "defect: " << res.defect << (res.degenerate ? " (degenerate)" : "") << "\n";
    os << "sigma_n: " << cli::text(res.sigma_n) << "\n";
    os << "sigma_n+1: " << cli::text(res.sigma_n1) << "\n";
    cli::write_output(o.out, os.str());
    return 0;
}

// diagnose

int cmd_diagnose(const Options& o) {
    const auto format = pick_format(o, {"text", "json"});
    const auto c = load_series(o);
    const auto res = approximant(c, o);
    const auto d = conditioning::diagnostics(res);
    const bool suspect = d.degenerate || !std::isfinite(d.kappa_S) || sweep::rounding_dominated(d.forward);

    std::optional<conditioning::SandwichReport> sandwich;
    if (!res.degenerate && std::isfinite(d.kappa_S)) {
        sandwich = conditioning::verify_norm_sandwiches(res.series, res);
    }

    const std::vector<std::pair<const char*, double>> values = {
        {"kappa_C", d.kappa_C}, {"kappa_T", d.kappa_T},   {"kappa_Q", d.kappa_Q},
        {"kappa_S", d.kappa_S}, {"forward", d.forward}, {"backward", d.backward},
    };

    if (format == "json") {
        Json doc;
        doc["m"] = res.m;
        doc["n"] = res.n;
        for (const auto& [k, v] : values) doc[k] = cli::number(v);
        doc["degenerate"] = d.degenerate;
        doc["suspect"] = suspect;
        doc["complex_data"] = d.complex_data;
        doc["rank_deficient"] = {{"C", d.rank_deficient_C},
                                 {"T", d.rank_deficient_T},
                                 {"Q", d.rank_deficient_Q},
                                 {"S", d.rank_deficient_S}};
        if (sandwich) {
            Json rows = Json::array();
            for (std::size_t k = 0; k < sandwich->kCount; ++k) {
                rows.push_back({{"inequality", sandwich->kNames[k]}, {"slack", cli::number(sandwich->slack[k])}});
            }
            doc["sandwiches"] = {{"holds", sandwich->holds()}, {"checks", rows}};
        } else {
            doc["sandwiches"] = nullptr;
        }
        cli::write_output(o.out, doc.dump(2) + "\n");
        return 0;
    }

    std::ostringstream os;
    os << "[" << res.m << "|" << res.n << "] diagnostics\n";
    for (const auto& [k, v] : values) os << k << ": " << cli::text(v) << "\n";
    if (d.degenerate) os << "degenerate approximant\n";
    if (suspect) os << "suspect: rounding errors may dominate\n";
    if (d.complex_data) os << "complex data: the real-map numbers are indicative only\n";
    if (sandwich) {
        os << "norm inequalities: " << (sandwich->holds() ? "all hold" : "VIOLATED") << "\n";
        for (std::size_t k = 0; k < sandwich->kCount; ++k) {
            os << "  " << sandwich->kNames[k] << "  slack " << cli::text(sandwich->slack[k]) << "\n";
        }
    }
    cli::write_output(o.out, os.str());
    return 0;
}

// certify

Json certificate_json(const spurious::Certificate& c) {
    return {{"status", spurious::to_string(c.status)}, {"trigger", c.trigger},
            {"hypothesis", c.hypothesis},              {"hypothesis_value", cli::number(c.hypothesis_value)},
            {"bound", cli::number(c.bound)},           {"observed", cli::number(c.observed)}};
}

std::string certificate_text(const char* name, const spurious::Certificate& c) {
    std::string s = std::string(name) + ": " + spurious::to_string(c.status);
    if (c.trigger == "degenerate") return s + " (degenerate approximant)\n";
    s += "\n  bound " + cli::text(c.bound) + ", observed " +
         (std::isinf(c.observed) ? std::string("none in the disk") : cli::text(c.observed)) + "\n";
    return s;
}

int cmd_certify(const Options& o) {
    const auto format = pick_format(o, {"text", "json"});
    const auto c = load_series(o);
    const auto res = approximant(c, o);
    const auto r = res.rational();
    const int m = res.m, n = res.n;

    const auto degeneracy = assess_degeneracy(r.p(), r.q());
    const double kappa_S = sylvester_condition(r);
    const auto froissart = spurious::certify_froissart(r, r, 0.0);
    const auto residual = spurious::certify_residuals(r, r, 0.0);
    const bool regular = std::isfinite(kappa_S) && !degeneracy.degenerate;
    std::optional<spurious::SpuriousReport> report;
    if (regular) report = spurious::spurious_report(r, kappa_S);
    // Any pair within this coefficient distance keeps kappa(S) within a factor two.
    const double radius = regular ? 1.0 / (3.0 * std::sqrt(2.0 * (m + n + 1)) * kappa_S) : 0.0;

    const auto gcd = ngcd::analyze(res.series.coeffs(), m, n);
    const double doublet_margin = ngcd::verify_ngcd_froissart(res.x.p(), res.x.q());
    std::optional<ngcd::LemmaCMReport> lookahead;
    if (m >= 1 && n >= 1) lookahead = ngcd::verify_lemma_CM(res.series.coeffs(), m, n);

    if (format == "json") {
        Json doc;
        doc["m"] = m;
        doc["n"] = n;
        doc["degenerate"] = degeneracy.degenerate;
        doc["defect"] = degeneracy.defect;
        doc["kappa_S"] = cli::number(kappa_S);
        doc["poles_in_closed_disk"] = report ? Json(report->poles_in_closed_disk) : Json(nullptr);
        doc["froissart"] = certificate_json(froissart);
        doc["residual"] = certificate_json(residual);
        doc["stable_radius"] = cli::number(radius);
        doc["ngcd"] = {{"epsilon", cli::number(gcd.epsilon)},
                       {"kappa_BL", cli::number(gcd.kappa_BL)},
                       {"kappa_CM", cli::number(gcd.kappa_CM)},
                       {"doublet_margin", cli::number(doublet_margin)}};
        if (lookahead) {
            doc["lookahead"] = {{"conclusive", lookahead->conclusive},
                                {"parts_hold", lookahead->conclusive && lookahead->parts_hold()},
                                {"ratio", cli::number(lookahead->ratio)},
                                {"bracket", {lookahead->bracket_low, lookahead->bracket_high}},
                                {"in_bracket", lookahead->conclusive && lookahead->ratio_in_bracket()}};
        } else {
            doc["lookahead"] = nullptr;
        }
        cli::write_output(o.out, doc.dump(2) + "\n");
        return 0;
    }

    std::ostringstream os;
    os << "[" << m << "|" << n << "] certificates\n";
    if (degeneracy.degenerate) os << "degenerate approximant: certificates are inconclusive\n";
    os << "kappa(S): " << cli::text(kappa_S) << "\n";
    if (report) {
        os << "poles in the closed disk: " << report->poles_in_closed_disk << "\n";
        os << "stable radius: " << cli::text(radius) << "\n";
    }
    os << certificate_text("froissart", froissart) << certificate_text("residual", residual);
    os << "epsilon-gcd: " << cli::text(gcd.epsilon) << "  kappa_BL: " << cli::text(gcd.kappa_BL)
       << "  kappa_CM: " << cli::text(gcd.kappa_CM) << "\n";
    os << "zero-pole distance minus epsilon: "
       << (std::isinf(doublet_margin) ? std::string("no pairs in the disk") : cli::text(doublet_margin)) << "\n";
    if (lookahead) {
        if (lookahead->conclusive) {
            os << "look-ahead: parts " << (lookahead->parts_hold() ? "hold" : "FAIL") << ", ratio "
               << cli::text(lookahead->ratio) << (lookahead->ratio_in_bracket() ? " in" : " outside")
               << " the bracket\n";
        } else {
            os << "look-ahead: inconclusive\n";
        }
    }
    cli::write_output(o.out, os.str());
    return 0;
}

// sweep

int cmd_sweep(const Options& o) {
    const auto format = pick_format(o, {"csv", "json"});
    if (o.fn.empty()) throw UsageError("sweep needs --fn");
    if (o.N < 1) throw UsageError("sweep needs --N >= 1");
    const auto rows = sweep::run(testfns::parse_family(o.fn), o.N, o.seed);

    if (format == "csv") {
        std::ostringstream os;
        sweep::write_csv(os, rows);
        cli::write_output(o.out, os.str());
        return 0;
    }
    Json doc = Json::array();
    for (const auto& r : rows) {
        doc.push_back({{"n", r.n},
                       {"kappa_C", cli::number(r.kappa_C)},
                       {"kappa_T", cli::number(r.kappa_T)},
                       {"kappa_Q", cli::number(r.kappa_Q)},
                       {"kappa_S", cli::number(r.kappa_S)},
                       {"forward", cli::number(r.forward)},
                       {"backward", cli::number(r.backward)},
                       {"inv_froissart", cli::number(r.inv_froissart)},
                       {"inv_residual", cli::number(r.inv_residual)},
                       {"suspect", r.suspect}});
    }
    cli::write_output(o.out, doc.dump(2) + "\n");
    return 0;
}

void series_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--m", o.m, "numerator degree")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", o.n, "denominator degree")->check(CLI::NonNegativeNumber);
    cmd->add_option("--robust", o.robust, "walk down the diagonal until sigma_n > tol sigma_1");
    cmd->add_option("--fn", o.fn, "built-in series: f1, f2 (exp) or f3 (random normal)");
    cmd->add_option("--seed", o.seed, "seed for f3");
    cmd->add_option("--coeffs", o.coeffs, "coefficient file: JSON [[re, im], ...] or `re im` lines");
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json or text (default text)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Padé approximation by SVD with conditioning diagnostics and spurious pole certificates",
                 "padeguard"};
    app.require_subcommand(1);
    Options o;

    auto* approximate = app.add_subcommand("approximate", "compute the [m|n] approximant");
    series_flags(approximate, o);
    auto* diagnose = app.add_subcommand("diagnose", "condition numbers of C, T, Q, S and the Padé map");
    series_flags(diagnose, o);
    auto* certify = app.add_subcommand("certify", "spurious pole certificates and numerical gcd estimates");
    series_flags(certify, o);

    auto* sweep_cmd = app.add_subcommand("sweep", "subdiagonal sweep n = 1..N as CSV");
    sweep_cmd->add_option("--fn", o.fn, "f1, f2 or f3")->required();
    sweep_cmd->add_option("--N", o.N, "largest n")->required();
    sweep_cmd->add_option("--seed", o.seed, "seed for f3");
    sweep_cmd->add_option("--out", o.out, "output path (default stdout)");
    sweep_cmd->add_option("--format", o.format, "csv or json (default csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*approximate) return cmd_approximate(o);
        if (*diagnose) return cmd_diagnose(o);
        if (*certify) return cmd_certify(o);
        return cmd_sweep(o);
    } catch (const UsageError& e) {
        std::cerr << "padeguard: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cli::IoError& e) {
        std::cerr << "padeguard: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "padeguard: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "padeguard: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "padeguard: " << e.what() << "\n";
        return kExitNumerical;
    }
}
