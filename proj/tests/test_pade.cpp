#include <doctest.h>

#include <cmath>
#include <set>
#include <utility>

#include "padeguard/metrics.hpp"
#include "padeguard/numerics.hpp"
#include "padeguard/pade.hpp"
#include "padeguard/structmat.hpp"
#include "padeguard/testfns.hpp"
#include "support.hpp"

using namespace padeguard;

namespace {

Matrix row(std::initializer_list<double> v) {
    Matrix A(1, v.size());
    int k = 0;
    for (double x : v) {
        A(0, k++) = x;
    }
    return A;
}

// Same function up to a scalar: parallel coefficient vectors.
double distance_to(const PadeResult& res, const RationalFunction& want) {
    return metrics::coefficient_distance(res.unscaled(), want);
}

// Number of distinct approximant types returned by the simplified robust walk
// on the exp diagonal for n = 0..12, tol = 1e-14.
constexpr std::size_t kExpDiagonalDistinct = 8;

}  // namespace

TEST_CASE("scale_input") {
    auto s = scale_input(std::vector<Complex>{2.0, 0.0, 0.0}, 1, 1);
    CHECK(std::abs(s.c[0] - 1.0) < 1e-15);
    CHECK(std::abs(s.scale_a - 0.5) < 1e-15);

    s = scale_input(std::vector<Complex>{1.0, 1.0, 1.0}, 1, 1);
    for (const auto& v : s.c) {
        CHECK(std::abs(v - 1.0 / std::sqrt(3.0)) < 1e-15);
    }
    s = scale_input(std::vector<Complex>{1.0, 1.0, 0.5}, 1, 1);
    CHECK(std::abs(s.scale_a - 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(s.c[2] - 1.0 / 3.0) < 1e-15);

    CHECK_THROWS_AS(scale_input(std::vector<Complex>{1.0, 1.0}, 1, 1), InvalidInput);
    CHECK_THROWS_AS(scale_input(std::vector<Complex>{0.0, 0.0, 0.0}, 1, 1), InvalidInput);
}

TEST_CASE("pade_denominator on small kernels") {
    auto d = pade_denominator(row({1.0, 0.0}));
    CHECK(std::abs(d.q(0)) < 1e-15);
    CHECK(std::abs(std::abs(d.q(1)) - 1.0) < 1e-15);

    // exp, m = n = 1, unscaled: c2 q0 + c1 q1 = 0 gives q ~ (1, -1/2).
    d = pade_denominator(row({0.5, 1.0}));
    CHECK(std::abs(d.q(1) / d.q(0) + 0.5) < 1e-14);

    d = pade_denominator(row({1.0, 1.0}));
    CHECK(std::abs(d.q(1) / d.q(0) + 1.0) < 1e-14);
    CHECK(d.sigma_n1 < 1e-15);

    d = pade_denominator(Matrix(0, 1));
    CHECK(d.q.size() == 1);
    CHECK(std::isinf(d.sigma_n));
}

TEST_CASE("pade_numerator") {
    Vector q(2);
    q << 1.0, -1.0;
    const auto p = pade_numerator(std::vector<Complex>{1.0, 1.0}, q, 0, 1);
    CHECK(p.size() == 1);
    CHECK(std::abs(p(0) - 1.0) < 1e-15);

    q << 1.0, -0.5;
    const auto pe = pade_numerator(std::vector<Complex>{1.0, 1.0, 0.5}, q, 1, 1);
    CHECK(std::abs(pe(0) - 1.0) < 1e-15);
    CHECK(std::abs(pe(1) - 0.5) < 1e-15);

    Vector one = Vector::Zero(3);
    one(0) = 1.0;
    const std::vector<Complex> c{2.0, 3.0, 4.0, 5.0, 6.0};
    const auto copy = pade_numerator(c, one, 2, 2);
    for (int j = 0; j <= 2; ++j) {
        CHECK(copy(j) == c[j]);
    }
}

TEST_CASE("normalize fixes norm and phase") {
    Vector x(2);
    x << 0.0, 2.0;
    auto nv = normalize(x, 0, 0);
    CHECK(std::abs(nv.x.entries(1) - 1.0) < 1e-15);
    x << 0.0, -2.0;
    nv = normalize(x, 0, 0);
    CHECK(std::abs(nv.x.entries(1) - 1.0) < 1e-15);

    Vector y(3);
    y << Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(2.0, 0.0);
    nv = normalize(y, 1, 0);
    // q0 = 2 here; put the imaginary unit on q0 instead.
    y << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 1.0);
    nv = normalize(y, 1, 0);
    const Complex phase(0.0, -1.0);
    CHECK(std::abs(nv.x.entries(0) - phase / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(nv.x.entries(2) - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("pade examples") {
    const auto e = pade(testfns::taylor_f2(3), 1, 1);
    CHECK(distance_to(e, RationalFunction({1.0, 0.5}, {1.0, -0.5})) < 1e-12);
    CHECK(support::order_defect(e.series.coeffs(), e.x.p(), e.x.q()) < 1e-12);
    CHECK_FALSE(e.degenerate);

    const auto g = pade(std::vector<Complex>{1.0, 1.0}, 0, 1);
    CHECK(distance_to(g, RationalFunction({1.0}, {1.0, -1.0})) < 1e-12);

    for (auto [m, n] : {std::pair{0, 0}, {2, 1}, {1, 3}, {3, 3}, {0, 2}}) {
        std::vector<Complex> c(m + n + 1, 0.0);
        c[0] = 1.0;
        const auto r = pade(c, m, n);
        CHECK(r.defect == std::min(m, n));
        CHECK(r.degenerate == (std::min(m, n) > 0));
        const auto q = r.x.q();
        for (int j = 1; j <= n; ++j) {
            CHECK(std::abs(q[j]) < 1e-14);
        }
        CHECK(std::abs(r.x.p()[0] - q[0]) < 1e-14);
    }
}

TEST_CASE("order condition, kernel residual and phase rule") {
    support::Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = rng.integer(0, 15);
        const int n = rng.integer(0, 15);
        const auto c = rng.unit_series(m + n + 1, rng.integer(0, 1) == 1);
        const auto res = pade(c, m, n);
        CHECK(std::abs(res.x.norm() - 1.0) < 1e-14);
        const Complex q0 = res.x.entries(m + 1);
        CHECK(q0.real() > 0.0);
        CHECK(q0.imag() == 0.0);
        if (res.degenerate) {
            continue;
        }
        CHECK(support::order_defect(res.series.coeffs(), res.x.p(), res.x.q()) <= 1e-9);
        CHECK(res.order_residual <= 1e-9);
        const Matrix T = structmat::build_T(res.series.coeffs(), m, n);
        CHECK((T * res.x.entries).norm() <= 1e-9);
    }
}

TEST_CASE("scaling covariance") {
    support::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = rng.integer(0, 8);
        const int n = rng.integer(0, 8);
        const auto c = rng.series(m + n + 1, false);
        const double alpha = std::exp(rng.uniform(-5.0, 5.0));
        std::vector<Complex> scaled(c);
        for (auto& v : scaled) {
            v *= alpha;
        }
        const auto a = pade(c, m, n);
        const auto b = pade(scaled, m, n);
        CHECK((a.x.entries - b.x.entries).norm() <= 1e-12);
    }
}

TEST_CASE("robust_pade") {
    // A planted [1|1] function requested at [4|4] reduces to the [1|1] form.
    const RationalFunction planted({1.0, 0.3}, {1.0, -0.6});
    const auto c = taylor_of_rational(planted, 9);
    const auto res = robust_pade(c, 4, 4, 1e-10);
    CHECK(res.m == 1);
    CHECK(res.n == 1);
    CHECK(res.defect == 0);
    CHECK(res.reductions == 3);
    CHECK(distance_to(res, planted) < 1e-10);

    const auto poly = robust_pade(testfns::taylor_f2(9), 4, 4, 2.0);
    CHECK(poly.n == 0);
    CHECK(poly.m == 0);
    CHECK(poly.exhausted);
    const auto tall = robust_pade(testfns::taylor_f2(9), 5, 3, 2.0);
    CHECK(tall.n == 0);
    CHECK(tall.m == 2);

    CHECK_THROWS_AS(robust_pade(c, 1, 1, 0.0), InvalidInput);

    support::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = rng.integer(0, 8);
        const int n = rng.integer(0, 8);
        const double tol = std::pow(10.0, rng.uniform(-12.0, -1.0));
        const auto r = robust_pade(rng.unit_series(m + n + 1, true), m, n, tol);
        if (r.n > 0) {
            CHECK(r.sigma_n > tol * r.sigma_1);
        }
        CHECK_FALSE(r.degenerate);
    }
}

TEST_CASE("robust walk on the exp diagonal") {
    const auto c = testfns::taylor_f2(25);
    std::set<std::pair<int, int>> types;
    for (int n = 0; n <= 12; ++n) {
        const auto r = robust_pade(c, n, n, 1e-14);
        types.insert({r.m, r.n});
    }
    MESSAGE("distinct robust diagonal approximants: " << types.size());
    CHECK(types.size() == kExpDiagonalDistinct);
}
