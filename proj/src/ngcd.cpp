#include "padeguard/ngcd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/LU>

#include "padeguard/numerics.hpp"
#include "padeguard/spurious.hpp"
#include "padeguard/structmat.hpp"

namespace padeguard::ngcd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Polynomial reversed(const Polynomial& p) {
    auto v = std::vector<Complex>(p.coeffs().begin(), p.coeffs().end());
    std::reverse(v.begin(), v.end());
    return Polynomial(std::move(v));
}

// Squared objective in one chart. The same formula serves the w chart when fed
// the reversed polynomials.
double chart_value(const Polynomial& p, const Polynomial& q, Complex z) {
    const double s = std::norm(z);
    auto weight = [s](int degree) {
        double sum = 0.0;
        double term = 1.0;
        for (int j = 0; j <= degree; ++j) {
            sum += term;
            term *= s;
        }
        return sum;
    };
    return std::norm(eval_poly(p, z)) / weight(p.formal_degree()) +
           std::norm(eval_poly(q, z)) / weight(q.formal_degree());
}

struct Charts {
    Polynomial p, q, p_rev, q_rev;

    Charts(const Polynomial& p_in, const Polynomial& q_in)
        : p(p_in), q(q_in), p_rev(reversed(p_in)), q_rev(reversed(q_in)) {}

    double value(int chart, Complex z) const {
        return chart == 0 ? chart_value(p, q, z) : chart_value(p_rev, q_rev, z);
    }
};

struct Candidate {
    double value;
    int chart;
    Complex point;
};

// Position on the unit sphere, used to keep candidates apart.
std::array<double, 3> sphere_point(int chart, Complex z) {
    if (chart == 1) {
        if (z == Complex(0.0)) {
            return {0.0, 0.0, 1.0};
        }
        z = 1.0 / z;
    }
    const double s = std::norm(z);
    return {2.0 * z.real() / (1.0 + s), 2.0 * z.imag() / (1.0 + s), (s - 1.0) / (s + 1.0)};
}

double sphere_distance(const Candidate& a, const Candidate& b) {
    const auto u = sphere_point(a.chart, a.point);
    const auto v = sphere_point(b.chart, b.point);
    return std::hypot(u[0] - v[0], u[1] - v[1], u[2] - v[2]);
}

std::vector<Candidate> polar_grid(const Charts& ch, int chart, double radius, int radial, int angular) {
    std::vector<Candidate> out;
    out.reserve(static_cast<std::size_t>(radial) * angular);
    out.push_back({ch.value(chart, 0.0), chart, 0.0});
    for (int i = 1; i < radial; ++i) {
        const double rho = radius * i / (radial - 1);
        for (int k = 0; k < angular; ++k) {
            const Complex z = std::polar(rho, 2.0 * std::numbers::pi * k / angular);
            out.push_back({ch.value(chart, z), chart, z});
        }
    }
    return out;
}

std::vector<Candidate> best_distinct(std::vector<Candidate> all, std::size_t count, double separation) {
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    std::vector<Candidate> picked;
    for (const auto& c : all) {
        const bool far = std::all_of(picked.begin(), picked.end(),
                                     [&](const Candidate& o) { return sphere_distance(c, o) > separation; });
        if (far) {
            picked.push_back(c);
            if (picked.size() == count) {
                break;
            }
        }
    }
    return picked;
}

Candidate nelder_mead(const Charts& ch, const Candidate& start, double step) {
    auto f = [&](const Complex& z) { return ch.value(start.chart, z); };
    std::array<Complex, 3> x = {start.point, start.point + step, start.point + Complex(0.0, step)};
    std::array<double, 3> fx = {f(x[0]), f(x[1]), f(x[2])};
    for (int iter = 0; iter < 4000; ++iter) {
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
        const int best = idx[0], mid = idx[1], worst = idx[2];
        const double diameter = std::max(std::abs(x[best] - x[mid]), std::abs(x[best] - x[worst]));
        if (diameter < 1e-13 * std::max(1.0, std::abs(x[best]))) {
            break;
        }
        const Complex centroid = 0.5 * (x[best] + x[mid]);
        const Complex reflected = centroid + (centroid - x[worst]);
        const double fr = f(reflected);
        if (fr < fx[best]) {
            const Complex expanded = centroid + 2.0 * (centroid - x[worst]);
            const double fe = f(expanded);
            if (fe < fr) {
                x[worst] = expanded;
                fx[worst] = fe;
            } else {
                x[worst] = reflected;
                fx[worst] = fr;
            }
            continue;
        }
        if (fr < fx[mid]) {
            x[worst] = reflected;
            fx[worst] = fr;
            continue;
        }
        const Complex contracted = fr < fx[worst] ? centroid + 0.5 * (reflected - centroid)
                                                  : centroid + 0.5 * (x[worst] - centroid);
        const double fc = f(contracted);
        if (fc < std::min(fr, fx[worst])) {
            x[worst] = contracted;
            fx[worst] = fc;
            continue;
        }
        for (int k : {mid, worst}) {
            x[k] = x[best] + 0.5 * (x[k] - x[best]);
            fx[k] = f(x[k]);
        }
    }
    const auto it = std::min_element(fx.begin(), fx.end());
    const auto k = static_cast<std::size_t>(it - fx.begin());
    return {fx[k], start.chart, x[k]};
}

Candidate zoom(const Charts& ch, Candidate c, double half_width) {
    constexpr int kSide = 21;
    for (int round = 0; round < 24; ++round) {
        const Complex centre = c.point;
        for (int i = 0; i < kSide; ++i) {
            for (int k = 0; k < kSide; ++k) {
                const Complex z = centre + Complex(half_width * (2.0 * i / (kSide - 1) - 1.0),
                                                   half_width * (2.0 * k / (kSide - 1) - 1.0));
                const double v = ch.value(c.chart, z);
                if (v < c.value) {
                    c = {v, c.chart, z};
                }
            }
        }
        half_width /= 4.0;
    }
    return c;
}

EpsilonGcd finish(const Candidate& c) {
    EpsilonGcd out;
    out.value = std::sqrt(std::max(c.value, 0.0));
    if (c.chart == 0) {
        out.argmin = ExtendedComplex::finite(c.point);
    } else if (c.point == Complex(0.0)) {
        out.argmin = ExtendedComplex::infinity();
    } else {
        out.argmin = ExtendedComplex::finite(1.0 / c.point);
    }
    return out;
}

Candidate best_of(const std::vector<Candidate>& cs) {
    return *std::min_element(cs.begin(), cs.end(),
                             [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
}

std::pair<Polynomial, Polynomial> unit_pair(const Polynomial& p, const Polynomial& q) {
    const double norm = std::hypot(p.norm(), q.norm());
    if (norm == 0.0) {
        throw InvalidInput("zero coefficient pair");
    }
    return {p * (1.0 / norm), q * (1.0 / norm)};
}

double inverse_column_norm(const Eigen::FullPivLU<Matrix>& lu, Eigen::Index size, Eigen::Index k) {
    return lu.solve(Vector::Unit(size, k)).norm();
}

}  // namespace

double epsilon_objective(const Polynomial& p, const Polynomial& q, const ExtendedComplex& z) {
    if (z.is_indeterminate()) {
        throw InvalidInput("objective at an indeterminate point");
    }
    const Charts ch(p, q);
    if (z.is_infinite()) {
        return std::sqrt(ch.value(1, 0.0));
    }
    return std::abs(z.value) <= 1.0 ? std::sqrt(ch.value(0, z.value))
                                    : std::sqrt(ch.value(1, 1.0 / z.value));
}

EpsilonGcd epsilon_gcd(const Polynomial& p, const Polynomial& q) {
    const Charts ch(p, q);
    constexpr int kGrid = 200;
    auto all = polar_grid(ch, 0, 2.0, kGrid, kGrid);
    auto outer = polar_grid(ch, 1, 1.0, kGrid, kGrid);
    all.insert(all.end(), outer.begin(), outer.end());

    std::vector<Candidate> refined;
    for (const auto& c : best_distinct(std::move(all), 8, 0.02)) {
        const double step = std::max(2.0 / kGrid, 1e-3 * std::abs(c.point));
        refined.push_back(c);
        refined.push_back(nelder_mead(ch, c, step));
    }
    return finish(best_of(refined));
}

EpsilonGcd epsilon_gcd_grid(const Polynomial& p, const Polynomial& q, int grid) {
    const Charts ch(p, q);
    auto all = polar_grid(ch, 0, 1.0, grid, grid);
    auto outer = polar_grid(ch, 1, 1.0, grid, grid);
    all.insert(all.end(), outer.begin(), outer.end());

    std::vector<Candidate> refined;
    const double spacing = 2.0 * std::numbers::pi / grid;
    for (const auto& c : best_distinct(std::move(all), 6, 0.02)) {
        refined.push_back(zoom(ch, c, 2.0 * spacing));
    }
    return finish(best_of(refined));
}

KappaBL kappa_BL(const Matrix& S) {
    KappaBL out;
    const Eigen::FullPivLU<Matrix> lu(S);
    if (S.rows() == 0 || S.rows() != S.cols() || !lu.isInvertible()) {
        out.value = kInf;
        out.singular = true;
        return out;
    }
    const auto size = S.rows();
    out.value = std::max(inverse_column_norm(lu, size, 0), inverse_column_norm(lu, size, size - 1));
    return out;
}

KappaCM kappa_CM(std::span<const Complex> c_raw, int m, int n) {
    if (n < 1) {
        throw InvalidInput("kappa_CM needs n >= 1");
    }
    const auto series = scale_input(c_raw, m, n);
    const Matrix C = structmat::build_C(series.coeffs(), m, n);
    const Matrix block = C.rightCols(n);
    KappaCM out;
    const Eigen::FullPivLU<Matrix> lu(block);
    if (!lu.isInvertible()) {
        out.kappa_CM = kInf;
        out.singular = true;
        return out;
    }
    const Vector y = lu.solve(Vector(C.col(0)));
    out.q.resize(n + 1);
    out.q << Complex(1.0), -y;
    out.q.normalize();
    out.q0 = out.q(0);

    const Vector x = lu.solve(Vector::Unit(n, n - 1));
    out.q_tilde = x / x.norm();
    out.e_tilde = 1.0 / x.norm();
    out.kappa_CM = 1.0 / std::abs(out.q0 * out.e_tilde);
    return out;
}

bool LemmaCMReport::parts_hold(double tol) const {
    auto ok = [tol](double margin, double scale) { return margin >= -tol * std::max(1.0, scale); };
    return conclusive && ok(margin_lower, kappa_CM) && ok(margin_upper, kappa_CM) &&
           ok(margin_sigma, 1.0);
}

bool LemmaCMReport::column_below_kappa_BL() const {
    return sylvester_column <= kappa_BL * (1.0 + 1e-12);
}

LemmaCMReport verify_lemma_CM(std::span<const Complex> c_raw, int m, int n) {
    if (m < 1 || n < 1) {
        throw InvalidInput("look-ahead lemma needs m, n >= 1");
    }
    LemmaCMReport rep;
    const auto res = pade(c_raw, m, n);
    const auto cm = kappa_CM(c_raw, m, n);
    if (res.degenerate || cm.singular) {
        return rep;
    }
    const auto& series = res.series;
    const Matrix C = structmat::build_C(series.coeffs(), m, n);

    rep.kappa_CM = cm.kappa_CM;
    rep.inv_block_norm = numerics::pinv_norm(C.rightCols(n));
    rep.margin_lower = rep.kappa_CM - rep.inv_block_norm / n;
    rep.margin_upper = std::sqrt(static_cast<double>(n)) * rep.inv_block_norm * rep.inv_block_norm - rep.kappa_CM;
    rep.margin_sigma = numerics::svd(C).smallest_row_rank() - 1.0 / (n * rep.kappa_CM);

    const Matrix S = structmat::build_square_sylvester(res.x.p(), res.x.q());
    const Eigen::FullPivLU<Matrix> lu(S);
    if (!lu.isInvertible()) {
        return rep;
    }
    rep.sylvester_column = inverse_column_norm(lu, S.rows(), S.rows() - 1);
    rep.kappa_BL = kappa_BL(S).value;
    rep.ratio = rep.kappa_CM / rep.sylvester_column;
    const double root = std::sqrt(static_cast<double>(m + n + 2));
    rep.bracket_low = 1.0 / (2.0 + root);
    rep.bracket_high = 2.0 + root;

    // Exact form with the look-ahead normalization ||vec(q)|| = ||vec(q~)|| = 1.
    const Vector p_cm = pade_numerator(series.coeffs(), cm.q, m, n);
    const Matrix S_cm = structmat::build_square_sylvester(Polynomial::from_vector(p_cm),
                                                          Polynomial::from_vector(cm.q));
    const double column_cm = Eigen::FullPivLU<Matrix>(S_cm).solve(Vector::Unit(m + n, m + n - 1)).norm();
    const Vector p_tilde = pade_numerator(series.coeffs(), cm.q_tilde, m - 1, n - 1);
    const double x_tilde = std::hypot(p_tilde.norm(), cm.q_tilde.norm());
    rep.identity_error = std::abs(rep.kappa_CM * x_tilde / column_cm - 1.0);
    rep.conclusive = true;
    return rep;
}

double verify_ngcd_froissart(const Polynomial& p_in, const Polynomial& q_in) {
    const auto [p, q] = unit_pair(p_in, q_in);
    auto roots_in_disk = [](const Polynomial& a) {
        std::vector<Complex> out;
        const int deg = a.degree(kLeadingZeroTol);
        if (deg <= 0) {
            return out;
        }
        const std::vector<Complex> head(a.coeffs().begin(), a.coeffs().begin() + deg + 1);
        for (const auto& z : numerics::poly_roots(Polynomial(head))) {
            if (std::abs(z) <= 1.0) {
                out.push_back(z);
            }
        }
        return out;
    };
    const auto zeros = roots_in_disk(p);
    const auto poles = roots_in_disk(q);
    if (zeros.empty() || poles.empty()) {
        return kInf;
    }
    const double eps = epsilon_gcd(p, q).value;
    const double factor = std::min(p.formal_degree(), q.formal_degree());
    double margin = kInf;
    for (const auto& s : zeros) {
        for (const auto& t : poles) {
            margin = std::min(margin, factor * std::abs(s - t) - eps);
        }
    }
    return margin;
}

NgcdResult analyze(std::span<const Complex> c_raw, int m, int n) {
    const auto res = pade(c_raw, m, n);
    NgcdResult out;
    const auto eps = epsilon_gcd(res.x.p(), res.x.q());
    out.epsilon = eps.value;
    out.argmin_z = eps.argmin;
    out.kappa_BL = m + n > 0 ? kappa_BL(structmat::build_square_sylvester(res.x.p(), res.x.q())).value : 1.0;
    if (n >= 1) {
        const auto cm = kappa_CM(c_raw, m, n);
        out.kappa_CM = cm.kappa_CM;
        out.e_tilde = cm.e_tilde;
        out.q0 = cm.q0;
    } else {
        // Empty block: q = 1 and nothing to invert.
        out.kappa_CM = 1.0;
        out.e_tilde = 1.0;
        out.q0 = 1.0;
    }
    return out;
}

}  // namespace padeguard::ngcd
