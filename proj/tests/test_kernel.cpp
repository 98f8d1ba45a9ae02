#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "asph/kernel.hpp"

using namespace asph;

namespace {

constexpr double kPi = 3.14159265358979323846;

// quadrature oracle: composite Simpson of the normalized kernel mass
double integral_oracle(const KernelSpec& k) {
    const double qmax = k.support_radius() / k.h();
    const int n = 4000;  // even
    const double dq = qmax / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
        // open interval at the top: a truncated kernel steps to zero at the
        // support radius and the jump value belongs to the integral
        const double q = (i == n) ? qmax * (1.0 - 1e-12) : i * dq;
        const double w = k.eval(q).w;
        const double f = (k.dim() == 1) ? w : 2.0 * kPi * q * k.h() * w;
        const double coef = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        s += coef * f;
    }
    s *= dq * k.h() / 3.0;
    return (k.dim() == 1) ? 2.0 * s : s;
}

// classic 2D cubic B-spline, written independently of the library form
double classic2d(double q, double h) {
    const double sigma = 15.0 / (7.0 * kPi * h * h);
    if (q < 1.0) return sigma * (2.0 / 3.0 - q * q + 0.5 * q * q * q);
    if (q < 2.0) return sigma * (2.0 - q) * (2.0 - q) * (2.0 - q) / 6.0;
    return 0.0;
}

double classic1d(double q, double h) {
    const double sigma = 1.0 / h;
    if (q < 1.0) return sigma * (2.0 / 3.0 - q * q + 0.5 * q * q * q);
    if (q < 2.0) return sigma * (2.0 - q) * (2.0 - q) * (2.0 - q) / 6.0;
    return 0.0;
}

}  // namespace

TEST_CASE("eval anchors") {
    KernelSpec k({1.0, 2.0, false}, 1.0, 1);
    CHECK(k.eval(0.0).w == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(k.eval(1.0).w == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(k.eval(2.0).w == 0.0);
    CHECK(k.eval(2.5).w == 0.0);
    CHECK(k.eval(2.5).dw == 0.0);

    // both pieces agree in value and slope at q = a
    const double eps = 1e-7;
    CHECK(k.eval(1.0 - eps).w == doctest::Approx(k.eval(1.0 + eps).w).epsilon(1e-6));
    CHECK(k.eval(1.0 - eps).dw == doctest::Approx(k.eval(1.0 + eps).dw).epsilon(1e-5));
}

TEST_CASE("invalid knots rejected") {
    CHECK_THROWS_AS(KernelSpec({2.0, 2.0, false}, 1.0, 1), ConfigError);
    CHECK_THROWS_AS(KernelSpec({2.5, 2.0, false}, 1.0, 1), ConfigError);
    CHECK_THROWS_AS(KernelSpec({-3.0, 2.0, false}, 1.0, 1), ConfigError);
    CHECK_THROWS_AS(KernelSpec({1.0, -1.0, false}, 1.0, 1), ConfigError);
}

TEST_CASE("normalization constants") {
    CHECK(normalization_constant({1.0, 2.0, false}, 1.0, 1) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(normalization_constant({1.0, 2.0, false}, 1.0, 2) ==
          doctest::Approx(15.0 / (7.0 * kPi)).epsilon(1e-14));
    // truncated b > 2 case: the quadrature of the renormalized kernel is 1
    KernelSpec trunc({3.58, 3.77, true}, 1.0, 1);
    CHECK(integral_oracle(trunc) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(trunc.support_radius() == doctest::Approx(2.0));
    CHECK(trunc.renorm() > 1.0);
}

TEST_CASE("normalization: 1000 random knot pairs, 1D and 2D") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> bdist(0.5, 4.0);
    std::uniform_real_distribution<double> fdist(0.05, 0.95);
    for (int t = 0; t < 1000; ++t) {
        const double b = bdist(rng);
        const double a = fdist(rng) * b;
        KnotPair kp{a, b, b > 2.0};
        for (int dim : {1, 2}) {
            KernelSpec k(kp, 1.0 + 0.5 * fdist(rng), dim);
            REQUIRE(integral_oracle(k) == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("extremum location") {
    CHECK(extremum_location({1.0, 2.0, false}, 1.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(extremum_location({2.0, 2.0, false}, 1.0) == doctest::Approx(1.0));
    CHECK(extremum_location({3.58, 3.77, true}, 1.0) ==
          doctest::Approx(1.836).epsilon(1e-3));
}

TEST_CASE("W'' sign structure and |W'| argmax") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> bdist(0.5, 4.0);
    std::uniform_real_distribution<double> fdist(0.05, 0.95);
    for (int t = 0; t < 50; ++t) {
        const double b = bdist(rng);
        const double a = fdist(rng) * b;
        KernelSpec k({a, b, b > 2.0}, 1.0, 2);
        const double qstar = a * b / (a + b);
        const double qmax = k.support_radius();
        double best_q = 0.0, best = 0.0;
        for (int i = 1; i < 10000; ++i) {
            const double q = qmax * i / 10000.0;
            const KernelEval e = k.eval(q);
            const double margin = 1e-3 * qmax;
            if (q < qstar - margin) REQUIRE(e.d2w < 0.0);
            if (q > qstar + margin && q < qmax - margin) REQUIRE(e.d2w > 0.0);
            if (std::abs(e.dw) > best) {
                best = std::abs(e.dw);
                best_q = q;
            }
        }
        if (qstar < qmax)
            REQUIRE(best_q == doctest::Approx(qstar).epsilon(2e-3));
    }
}

TEST_CASE("classic cubic B-spline recovery") {
    KernelSpec k1({1.0, 2.0, false}, 1.3, 1);
    KernelSpec k2({1.0, 2.0, false}, 1.3, 2);
    for (double q : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        CHECK(std::abs(k1.eval(q).w - classic1d(q, 1.3)) < 1e-12);
        CHECK(std::abs(k2.eval(q).w - classic2d(q, 1.3)) < 1e-12);
    }
}

TEST_CASE("compression-mode kernels") {
    for (double a : {0.0, -1.0}) {
        KernelSpec k({a, 2.0, false}, 1.0, 2);
        CHECK(integral_oracle(k) == doctest::Approx(1.0).epsilon(1e-6));
        for (int i = 1; i < 2000; ++i) {
            const double q = 2.0 * i / 2000.0;
            REQUIRE(k.eval(q).d2w >= 0.0);
        }
    }
}

TEST_CASE("derivative consistency with finite differences") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> bdist(0.8, 3.5);
    std::uniform_real_distribution<double> fdist(0.1, 0.9);
    for (int t = 0; t < 20; ++t) {
        const double b = bdist(rng);
        const double a = fdist(rng) * b;
        KernelSpec k({a, b, b > 2.0}, 1.0, 2);
        const double qmax = k.support_radius();
        const double qstar = a * b / (a + b);
        for (int i = 1; i < 200; ++i) {
            const double q = qmax * i / 200.0;
            // skip the knot and support edge where derivatives jump
            if (std::abs(q - a) < 0.02 || std::abs(q - qmax) < 0.02) continue;
            if (std::abs(q - qstar) < 0.02) continue;  // dw extremum: d2w ~ 0
            const double e = 1e-6;
            const double dw_fd = (k.eval(q + e).w - k.eval(q - e).w) / (2 * e);
            // wider stencil for the second difference keeps rounding noise
            // down; the kernel is piecewise cubic so there is no truncation
            // error as long as the stencil stays within one piece
            const double e2 = 1e-4;
            const double d2w_fd =
                (k.eval(q + e2).w - 2 * k.eval(q).w + k.eval(q - e2).w) / (e2 * e2);
            REQUIRE(k.eval(q).dw == doctest::Approx(dw_fd).epsilon(1e-6));
            REQUIRE(k.eval(q).d2w == doctest::Approx(d2w_fd).epsilon(1e-3));
        }
    }
}

TEST_CASE("knot adaptation") {
    auto triple = [](double r) { return adapt_knots(r, 2.0, 1.05, true); };
    CHECK(triple(1.5).knots.a == doctest::Approx(1.30).epsilon(0.01));
    CHECK(triple(1.5).knots.b == doctest::Approx(2.0));
    CHECK_FALSE(triple(1.5).knots.extended);
    CHECK(triple(2.5).knots.a == doctest::Approx(2.56).epsilon(0.005));
    CHECK(triple(2.5).knots.b == doctest::Approx(2.69).epsilon(0.005));
    CHECK(triple(2.5).knots.extended);
    CHECK(triple(3.5).knots.a == doctest::Approx(3.58).epsilon(0.005));
    CHECK(triple(3.5).knots.b == doctest::Approx(3.77).epsilon(0.005));

    const AdaptResult clamped = adapt_knots(2.5, 2.0, 1.05, false);
    CHECK(clamped.knots.a == doctest::Approx(1.95));
    CHECK(clamped.knots.b == doctest::Approx(2.0));
    CHECK(clamped.saturated);
    CHECK_FALSE(clamped.knots.extended);

    CHECK_THROWS_AS(adapt_knots(0.0, 2.0, 1.05, true), std::invalid_argument);
    CHECK_THROWS_AS(adapt_knots(-1.0, 2.0, 1.05, true), std::invalid_argument);

    // a nondecreasing in r_i within each regime; the switch to the extended
    // regime itself steps a down (from 1.95 toward 0.95 b)
    for (bool ext : {true, false}) {
        double prev = 0.0;
        bool prev_extended = false;
        for (int i = 1; i <= 400; ++i) {
            const double r = 0.01 * i * 2.0;
            const AdaptResult res = adapt_knots(r, 2.0, 1.05, ext);
            if (res.knots.extended == prev_extended) REQUIRE(res.knots.a >= prev - 1e-12);
            prev = res.knots.a;
            prev_extended = res.knots.extended;
        }
    }
}

TEST_CASE("swegle tension criterion") {
    KernelSpec k({1.0, 2.0, false}, 1.0, 2);
    CHECK(swegle_stable_tension(0.5, k));
    CHECK_FALSE(swegle_stable_tension(1.0, k));
    // exactly at the inflection W'' = 0 counts as unstable; knots chosen so
    // q* = ab/(a+b) = 0.375 is exactly representable
    KernelSpec k2({0.5, 1.5, false}, 1.0, 2);
    CHECK_FALSE(swegle_stable_tension(0.375, k2));
}
