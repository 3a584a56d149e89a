#include <doctest.h>

#include <cmath>

#include "padeguard/ngcd.hpp"
#include "padeguard/numerics.hpp"
#include "padeguard/structmat.hpp"
#include "padeguard/testfns.hpp"
#include "support.hpp"

using namespace padeguard;
using namespace padeguard::ngcd;

namespace {

std::pair<Polynomial, Polynomial> unit(const Polynomial& p, const Polynomial& q) {
    const double s = 1.0 / std::hypot(p.norm(), q.norm());
    return {p * s, q * s};
}

}  // namespace

TEST_CASE("epsilon vanishes at a planted common root") {
    const auto [p, q] = unit(support::from_roots({0.3, -1.5}), support::from_roots({0.3, 0.8, Complex(0.0, 2.0)}));
    const auto e = epsilon_gcd(p, q);
    CHECK(e.value <= 1e-8);
    REQUIRE(e.argmin.is_finite());
    CHECK(std::abs(e.argmin.value - 0.3) < 1e-6);
}

TEST_CASE("epsilon of (z - 1, z + 1) is constant") {
    // |z-1|^2 + |z+1|^2 = 2 (1 + |z|^2), so the objective is 1/2 everywhere.
    const auto [p, q] = unit(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0});
    CHECK(epsilon_gcd(p, q).value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(epsilon_gcd_grid(p, q, 200).value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("epsilon at infinity") {
    const auto [p, q] = unit(Polynomial{1.0, 2.0, 0.0}, Polynomial{-1.0, 0.5, 0.0});
    const auto e = epsilon_gcd(p, q);
    CHECK(e.value <= 1e-12);
    CHECK(epsilon_objective(p, q, ExtendedComplex::infinity()) == 0.0);
    const Polynomial a{1.0, 2.0}, b{3.0, 4.0};
    CHECK(epsilon_objective(a, b, ExtendedComplex::infinity()) == doctest::Approx(std::sqrt(20.0)));
    // Both charts agree away from the origin and infinity.
    const Complex z(1.7, -0.4);
    const double direct = std::sqrt(std::norm(eval_poly(a, z)) / (1 + std::norm(z)) +
                                    std::norm(eval_poly(b, z)) / (1 + std::norm(z)));
    CHECK(epsilon_objective(a, b, ExtendedComplex::finite(z)) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("optimizer agrees with the grid oracle") {
    support::Rng rng(81);
    for (int trial = 0; trial < 15; ++trial) {
        const int m = rng.integer(0, 6);
        const int n = rng.integer(0, 6);
        const auto [p, q] = unit(rng.poly(m, true), rng.poly(n, true));
        const double fast = epsilon_gcd(p, q).value;
        const double slow = epsilon_gcd_grid(p, q).value;
        INFO("m=" << m << " n=" << n);
        CHECK(std::abs(fast - slow) <= 1e-6);
    }
}

TEST_CASE("kappa_BL") {
    CHECK(kappa_BL(Matrix::Identity(3, 3)).value == doctest::Approx(1.0));
    Matrix D = Matrix::Identity(2, 2);
    D(1, 1) = 1e-6;
    CHECK(kappa_BL(D).value == doctest::Approx(1e6));
    const auto s = kappa_BL(Matrix::Zero(2, 2));
    CHECK(s.singular);
    CHECK(std::isinf(s.value));

    support::Rng rng(82);
    double lo = INFINITY, hi = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int m = rng.integer(1, 6);
        const int n = rng.integer(1, 6);
        const auto [p, q] = unit(rng.poly(m, true), rng.poly(n, true));
        const Matrix S = structmat::build_square_sylvester(p, q);
        const double inv = numerics::pinv_norm(S);
        const double kbl = kappa_BL(S).value;
        CHECK(kbl <= inv * (1.0 + 1e-12));
        const double k = numerics::cond(S);
        lo = std::min(lo, kbl / std::sqrt(k));
        hi = std::max(hi, kbl / k);
    }
    MESSAGE("kappa_BL / sqrt(kappa(S_)) >= " << lo << ", kappa_BL / kappa(S_) <= " << hi);
}

TEST_CASE("kappa_CM closed form for the geometric series") {
    const auto cm = kappa_CM(std::vector<Complex>{1.0, 1.0}, 0, 1);
    CHECK_FALSE(cm.singular);
    CHECK(cm.q0.real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(cm.e_tilde) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(cm.kappa_CM == doctest::Approx(2.0));
    CHECK_THROWS_AS(kappa_CM(std::vector<Complex>{1.0}, 0, 0), InvalidInput);
    CHECK(kappa_CM(std::vector<Complex>{1.0, 0.0, 0.0}, 1, 1).singular);
}

TEST_CASE("kappa_CM bounds on random series") {
    support::Rng rng(83);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = rng.integer(0, 8);
        const int n = rng.integer(1, 8);
        const auto c = rng.series(m + n + 1, rng.integer(0, 1) == 1);
        const auto cm = kappa_CM(c, m, n);
        if (cm.singular) {
            continue;
        }
        const auto s = scale_input(c, m, n);
        const Matrix C = structmat::build_C(s.coeffs(), m, n);
        const double inv = numerics::pinv_norm(C.rightCols(n));
        CHECK(cm.kappa_CM >= inv / n * (1.0 - 1e-10));
        CHECK(cm.kappa_CM <= std::sqrt(static_cast<double>(n)) * inv * inv * (1.0 + 1e-10));
        CHECK(numerics::svd(C).smallest_row_rank() >= 1.0 / (n * cm.kappa_CM) * (1.0 - 1e-10));

        std::vector<Complex> scaled(c);
        for (auto& v : scaled) {
            v *= 37.5;
        }
        CHECK(kappa_CM(scaled, m, n).kappa_CM == doctest::Approx(cm.kappa_CM).epsilon(1e-10));
        ++checked;
    }
    CHECK(checked > 400);
}

TEST_CASE("look-ahead estimator on the exp series") {
    const auto c = testfns::taylor_f2(40);
    // [8|8] has kappa(S_) near 1e16: its block is singular to working precision.
    for (int n = 2; n <= 8; ++n) {
        for (int m : {n - 1, n}) {
            if (m == 8) {
                CHECK_FALSE(verify_lemma_CM(c, m, n).conclusive);
                continue;
            }
            const auto rep = verify_lemma_CM(c, m, n);
            INFO("m=" << m << " n=" << n << " ratio=" << rep.ratio);
            REQUIRE(rep.conclusive);
            CHECK(rep.parts_hold());
            CHECK(rep.ratio_in_bracket());
            CHECK(rep.column_below_kappa_BL());
            CHECK(rep.identity_error < 1e-8);
        }
    }
}

TEST_CASE("kappa_CM grows with n on the Stieltjes series") {
    const auto c = testfns::taylor_f1(40);
    double first = 0.0, last = 0.0;
    for (int n = 2; n <= 12; n += 2) {
        const auto cm = kappa_CM(c, n, n);
        REQUIRE_FALSE(cm.singular);
        MESSAGE("n=" << n << " kappa_CM=" << cm.kappa_CM);
        if (n == 2) first = cm.kappa_CM;
        last = cm.kappa_CM;
    }
    CHECK(last > 100.0 * first);
}

TEST_CASE("kappa_CM flags a block") {
    const RationalFunction planted({1.0, 0.3}, {1.0, -0.6});
    auto c = taylor_of_rational(planted, 9);
    support::Rng rng(84);
    for (auto& v : c) {
        v += 1e-10 * rng.normal();
    }
    const double inside = kappa_CM(c, 2, 2).kappa_CM;
    const double outside = kappa_CM(c, 1, 1).kappa_CM;
    MESSAGE("kappa_CM [1|1]=" << outside << " [2|2]=" << inside);
    CHECK(outside < 1e2);
    CHECK(inside > 1e6);
}

TEST_CASE("zero-pole distance bounds epsilon") {
    const auto [p, q] = unit(support::from_roots({0.5, -0.2, Complex(0.1, 0.6)}),
                             support::from_roots({0.5001, 0.9, Complex(-0.3, -0.3)}));
    CHECK(epsilon_gcd(p, q).value <= 3e-4);
    CHECK(verify_ngcd_froissart(p, q) >= -1e-8);

    const auto [a, b] = unit(support::from_roots({0.4, 0.1}), support::from_roots({0.4, -0.5}));
    CHECK(epsilon_gcd(a, b).value <= 1e-8);
    CHECK(verify_ngcd_froissart(a, b) >= -1e-8);

    CHECK(std::isinf(verify_ngcd_froissart(Polynomial{1.0, 0.1}, Polynomial{1.0, 0.1})));
}

TEST_CASE("Eckart-Young direction") {
    support::Rng rng(85);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int m = rng.integer(1, 5);
        const int n = rng.integer(1, 5);
        const auto [p, q] = unit(rng.poly(m, true), rng.poly(n, true));
        // Move p and q to share the root nearest to their best common root.
        const auto e = epsilon_gcd(p, q);
        const Complex root = e.argmin.is_finite() ? e.argmin.value : Complex(1e3);
        const auto shift = [&](const Polynomial& a) {
            std::vector<Complex> v(a.coeffs().begin(), a.coeffs().end());
            v[0] -= eval_poly(a, root);
            return Polynomial(v);
        };
        const Matrix S = structmat::build_S(p, q);
        const Matrix St = structmat::build_S(shift(p), shift(q));
        const double sigma = numerics::svd(S).smallest_row_rank();
        CHECK(sigma <= numerics::spectral_norm(S - St) * (1.0 + 1e-10));
        worst = std::max(worst, 1.0 / (numerics::cond(S) * e.value));
    }
    MESSAGE("max (1/kappa(S)) / eps = " << worst);
}
