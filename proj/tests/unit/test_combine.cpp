#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vrsmooth/combine.hpp"

using namespace vrsmooth;

namespace {
const double kS = 1.0 / std::sqrt(2.0);

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("coeffs_a examples") {
    const auto a0 = coeffs_a(0.0);
    CHECK(a0[0] == 0.0);
    CHECK(a0[1] == 1.0);
    CHECK(a0[2] == 0.0);
    const auto ap = coeffs_a(kS);
    CHECK(near(ap[0], -0.1035534, 1e-7));
    CHECK(near(ap[1], 0.5, 1e-15));
    CHECK(near(ap[2], 0.6035534, 1e-7));
    const auto am = coeffs_a(-kS);
    CHECK(near(am[0], 0.6035534, 1e-7));
    CHECK(near(am[1], 0.5, 1e-15));
    CHECK(near(am[2], -0.1035534, 1e-7));
    CHECK_THROWS_AS(coeffs_a(1.0), std::domain_error);
    CHECK_THROWS_AS(coeffs_a(-1.5), std::domain_error);
    CHECK_THROWS_AS(coeffs_a(std::nan("")), std::domain_error);
}

TEST_CASE("coeffs_a moment conditions, 1000 random shifts") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-0.999, 0.999);
    for (int i = 0; i < 1000; ++i) {
        const double r = u(rng);
        const auto a = coeffs_a(r);
        CHECK(near(a[0] + a[1] + a[2], 1.0, 1e-14));
        for (int m = 0; m <= 2; ++m) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j) s += a[j] * std::pow(-1.0 + j - r, m);
            CHECK(near(s, m == 0 ? 1.0 : 0.0, 1e-12));
        }
        // Reflection: A_j(-r) = A_{2-j}(r).
        const auto b = coeffs_a(-r);
        for (int j = 0; j < 3; ++j) CHECK(near(b[j], a[2 - j], 1e-15));
    }
}

TEST_CASE("quadratic reproduction on the grid") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double c0 = u(rng), c1 = 3 * u(rng), c2 = 5 * u(rng);
        auto q = [&](double t) { return c0 + c1 * t + c2 * t * t; };
        const double x = pos(rng), r = 0.999 * u(rng), delta = 3.0 * pos(rng), h = 0.2 * pos(rng) + 1e-3;
        const auto a = coeffs_a(r);
        const auto g = grid_offsets(x, r, delta, h);
        double s = 0.0;
        for (int j = 0; j < 3; ++j) s += a[j] * q(g.alpha[j]);
        CHECK(near(s, q(x), 1e-10));
    }
}

TEST_CASE("coeffs_b examples and errors") {
    const auto b0 = coeffs_b(0.0, 2.0);
    CHECK(b0[0] == 0.0);
    CHECK(b0[1] == 1.0);
    CHECK(b0[2] == 0.0);
    const auto b1 = coeffs_b(1.0, 2.0);
    CHECK(b1[0] == 0.0);
    CHECK(near(b1[1], 0.0, 1e-15));
    CHECK(near(b1[2], 1.0, 1e-15));
    const auto bh = coeffs_b(0.5, 2.0);
    CHECK(near(bh[0], -0.0416667, 1e-7));
    CHECK(near(bh[1], 0.625, 1e-15));
    CHECK(near(bh[2], 0.4166667, 1e-7));
    CHECK(near(bh[0] + bh[1] + bh[2], 1.0, 1e-12));
    CHECK_THROWS_AS(coeffs_b(0.3, 1.0), std::domain_error);
    CHECK_THROWS_AS(coeffs_b(0.3, 0.0), std::domain_error);
    CHECK_THROWS_AS(coeffs_b(0.3, -2.0), std::domain_error);
}

TEST_CASE("coeffs_b interpolation conditions, 200 random triples") {
    // B_j(r) are the Lagrange weights at nodes (-k, 0, 1) evaluated at r, so
    // the exact offsets are (-k - r, -r, 1 - r). The offsets (-r, k - r,
    // k + 1 - r) do not satisfy the m = 1 condition (r = 0, k = 2 gives 2).
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ur(-0.99, 0.99);
    std::uniform_real_distribution<double> uk(0.1, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double r = ur(rng);
        double k = uk(rng);
        if (std::abs(k - 1.0) < 1e-3) k += 0.01;
        const auto b = coeffs_b(r, k);
        const double off[3] = {-k - r, -r, 1.0 - r};
        for (int m = 0; m <= 2; ++m) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j) s += b[j] * std::pow(off[j], m);
            CHECK(near(s, m == 0 ? 1.0 : 0.0, 1e-10));
        }
    }
}

TEST_CASE("grid_offsets examples and invariants") {
    auto g = grid_offsets(0.5, 0.0, 1.0, 0.1);
    CHECK(near(g.alpha[0], 0.4, 1e-15));
    CHECK(g.alpha[1] == 0.5);
    CHECK(near(g.alpha[2], 0.6, 1e-15));
    CHECK(near(g.omega, 0.1, 1e-15));

    g = grid_offsets(0.5, kS, 1.0, 0.1);
    CHECK(near(g.alpha[0], 0.3292893, 1e-7));
    CHECK(near(g.alpha[1], 0.4292893, 1e-7));
    CHECK(near(g.alpha[2], 0.5292893, 1e-7));

    g = grid_offsets(0.37, 0.4, 0.0, 0.2);
    for (double a : g.alpha) CHECK(a == 0.37);
    CHECK(g.omega == 0.0);

    CHECK_THROWS_AS(grid_offsets(0.5, 0.1, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(grid_offsets(0.5, 0.1, -1.0, 0.1), std::domain_error);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double x = u(rng), r = 1.98 * u(rng) - 0.99, d = 2.0 * u(rng) + 1e-3, h = 0.3 * u(rng) + 1e-3;
        g = grid_offsets(x, r, d, h);
        CHECK(g.alpha[0] < g.alpha[1]);
        CHECK(g.alpha[1] < g.alpha[2]);
        CHECK(near(g.alpha[1] - g.alpha[0], g.omega, 1e-12));
        CHECK(near(g.alpha[2] - g.alpha[1], g.omega, 1e-12));
        CHECK(near(g.alpha[1] + r * g.omega, x, 1e-12));
    }
}

TEST_CASE("boundary_delta examples") {
    CHECK(boundary_delta(0.5, 1.0, 0.1) == 1.0);
    CHECK(near(boundary_delta(0.1, 1.0, 0.1), 0.5857864, 1e-7));
    CHECK(boundary_delta(0.0, 1.0, 0.1) == 0.0);
    CHECK(boundary_delta(1.0, 1.0, 0.1) == 0.0);
    CHECK_THROWS_AS(boundary_delta(-0.01, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(boundary_delta(1.01, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(boundary_delta(0.5, 1.0, 0.0), std::domain_error);
}

TEST_CASE("boundary rule keeps every grid point in [0, 1]") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng), delta = 4.0 * u(rng), h = 0.3 * u(rng) + 1e-3;
        const double r = 1.98 * u(rng) - 0.99;
        for (const auto& spec : {CombinerSpec::plus(delta), CombinerSpec::minus(delta), CombinerSpec::q(r, delta)}) {
            const double d = boundary_delta(x, delta, h, spec.reach());
            CHECK(d <= delta);
            CHECK(d >= 0.0);
            const auto g = grid_offsets(x, spec.shift(), d, h);
            for (double a : g.alpha) {
                CHECK(a >= -1e-12);
                CHECK(a <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("r^2 (1 - r^2) peaks at +-1/sqrt(2) with value 1/4") {
    double best = -1.0, arg = 0.0;
    const int n = 100000;
    for (int i = 1; i < n; ++i) {
        const double r = -1.0 + 2.0 * i / n;
        const double v = r * r * (1.0 - r * r);
        if (v > best) best = v, arg = r;
    }
    CHECK(near(best, 0.25, 1e-8));
    CHECK(near(std::abs(arg), kS, 1e-4));
    CHECK(kOptimalShift == doctest::Approx(kS).epsilon(1e-16));
}

TEST_CASE("CombinerSpec helpers") {
    CHECK(variant_from_string("avg") == Variant::Average);
    CHECK(variant_from_string("minus") == Variant::Minus);
    CHECK(to_string(Variant::Q) == "q");
    CHECK_THROWS_AS(variant_from_string("median"), std::invalid_argument);
    CHECK_THROWS_AS(CombinerSpec::q(1.0, 1.0), std::domain_error);
    CHECK(CombinerSpec::plus(1.0).shift() == kOptimalShift);
    CHECK(CombinerSpec::minus(1.0).shift() == -kOptimalShift);
    CHECK(CombinerSpec::q(0.3, 1.0).reach() == kPlusMinusReach);
    CHECK(CombinerSpec::q(0.9, 1.0).reach() == doctest::Approx(1.9));

    // Effective-kernel weights sum to 1 and have vanishing first two moments.
    for (const auto& spec : {CombinerSpec::local_linear(), CombinerSpec::q(0.3, 1.2), CombinerSpec::plus(0.8),
                             CombinerSpec::minus(2.0), CombinerSpec::average(1.0)}) {
        double m0 = 0, m1 = 0, m2 = 0;
        for (const auto& t : spec.effective_terms(spec.delta)) {
            m0 += t.weight;
            m1 += t.weight * t.shift;
            m2 += t.weight * t.shift * t.shift;
        }
        CHECK(near(m0, 1.0, 1e-14));
        CHECK(near(m1, 0.0, 1e-12));
        CHECK(near(m2, 0.0, 1e-12));
    }
}
