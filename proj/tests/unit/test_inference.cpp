#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "table1.hpp"
#include "vrsmooth/bandwidth.hpp"
#include "vrsmooth/functionals.hpp"
#include "vrsmooth/inference.hpp"

using namespace vrsmooth;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

Dataset noisy_line(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> z(0.0, 0.5);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = u(rng);
        ys[i] = 1.0 - xs[i] + z(rng);
    }
    return Dataset(xs, ys);
}

SmootherConfig cfg_of(double h) {
    SmootherConfig c;
    c.h = h;
    return c;
}

}  // namespace

TEST_CASE("normal distribution helpers") {
    CHECK(std::abs(normal_quantile(0.975) - 1.959963984540054) < 1e-12);
    CHECK(normal_quantile(0.5) == 0.0);
    for (double p : {1e-6, 0.01, 0.3, 0.8, 0.999}) CHECK(std::abs(normal_cdf(normal_quantile(p)) - p) < 1e-12);
    CHECK(std::abs(normal_pdf(0.0) - 0.3989422804014327) < 1e-15);
    CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
}

TEST_CASE("interval examples") {
    const auto d = noisy_line(400, 30);
    const auto cfg = cfg_of(0.1);
    const auto half = interval(d, cfg, 0.4, 0.5, CombinerSpec::local_linear());
    CHECK(half.lower == half.estimate);

    const auto ll = interval(d, cfg, 0.4, 0.9, CombinerSpec::local_linear());
    CHECK(std::isfinite(ll.lower));
    CHECK(ll.half_width_scale > 0.0);
    CHECK(ll.estimate == local_linear(d, cfg, 0.4));
    CHECK(std::abs(ll.lower - (ll.estimate - normal_quantile(0.9) * ll.half_width_scale)) < 1e-15);

    const auto vr0 = interval(d, cfg, 0.4, 0.9, CombinerSpec::average(0.0));
    CHECK(vr0.lower == ll.lower);
    CHECK(vr0.half_width_scale == ll.half_width_scale);

    const Kernel& k = cfg.kernel;
    for (const auto& spec : {CombinerSpec::plus(1.0), CombinerSpec::q(0.4, 1.5), CombinerSpec::average(1.0)}) {
        const auto vr = interval(d, cfg, 0.4, 0.9, spec);
        CHECK(vr.effective_delta == spec.delta);
        const double ratio = std::sqrt(effective_nu02(k, spec) / nu_moment(k, 0, 2));
        CHECK(std::abs(vr.half_width_scale / ll.half_width_scale - ratio) < 1e-9);
        CHECK(vr.half_width_scale < ll.half_width_scale);
    }
    // Near the boundary the shrunken bin width sets the variance constant.
    const auto edge = interval(d, cfg, 0.05, 0.9, CombinerSpec::plus(1.0));
    CHECK(edge.effective_delta < 1.0);
    CHECK(edge.half_width_scale > 0.0);
}

TEST_CASE("interval errors") {
    const auto d = noisy_line(100, 31);
    CHECK_THROWS_AS(interval(d, cfg_of(0.1), 0.5, 1.0, CombinerSpec::local_linear()), std::domain_error);
    CHECK_THROWS_AS(interval(d, cfg_of(0.1), 0.5, 0.0, CombinerSpec::local_linear()), std::domain_error);
    const Dataset far({0.0, 0.01, 0.02}, {1, 2, 3});
    CHECK_THROWS_AS(interval(far, cfg_of(0.1), 0.8, 0.9, CombinerSpec::local_linear()), EmptyWindow);
}

TEST_CASE("coverage_prediction examples") {
    const Kernel k = Kernel::epanechnikov();
    const auto gauss = coverage_prediction({1.0, 1.0, 1.0, 0.0}, k, 1000, 0.05, 0.95, CombinerSpec::local_linear());
    CHECK(gauss.nh_term == 0.0);
    CHECK(gauss.h2_term != 0.0);

    const double beta_root3 = normal_cdf(std::sqrt(3.0));
    const auto p3 = coverage_prediction({1.0, 1.0, 1.0, 1.0}, k, 1000, 0.05, beta_root3, CombinerSpec::plus(1.0));
    CHECK(std::abs(p3.h2_term) < 1e-15);

    // Frozen from a 30-digit mpmath evaluation of the two-term expansion.
    const auto p = coverage_prediction({1.0, 1.0, 1.0, 1.0}, k, 1000, 0.05, 0.95, CombinerSpec::local_linear());
    CHECK(p.leading == 0.95);
    CHECK(std::abs(p.h2_term - -1.4851577556624532e-5) < 1e-15);
    CHECK(std::abs(p.nh_term - 0.01184262166537022) < 1e-12);
    CHECK(std::abs(p.total() - 0.9618277700878136) < 1e-12);

    const auto vr0 = coverage_prediction({1.0, 1.0, 1.0, 1.0}, k, 1000, 0.05, 0.95, CombinerSpec::q(kS, 0.0));
    CHECK(vr0.h2_term == p.h2_term);
    CHECK(vr0.nh_term == p.nh_term);
}

TEST_CASE("coverage_prediction uses the combined kernel moments") {
    const Kernel k = Kernel::normal();
    const CoverageOracle o{-2.0, 0.7, 0.4, 0.3};
    const double n = 800, h = 0.07, beta = 0.9;
    const auto spec = CombinerSpec::q(kS, 1.2);
    const auto p = coverage_prediction(o, k, n, h, beta, spec);
    const double z = normal_quantile(beta), phi = normal_pdf(z);
    const double t2 = nu_tilde(k, 2, kS, 1.2), t3 = nu_tilde(k, 3, kS, 1.2);
    const double h2 = std::sqrt(n * std::pow(h, 5)) / 4 * nu_moment(k, 2, 2) / std::sqrt(t2) / o.sigma *
                      std::sqrt(o.f) * o.m2 * (z * z - 3) * phi;
    const double nh = -std::pow(n * h, -0.5) / 6 * std::pow(t2, -1.5) * std::pow(o.sigma, -3) / std::sqrt(o.f) * o.v3 *
                      (t3 * (z * z - 1) - 3 * t2 * t2 * z * z) * phi;
    CHECK(std::abs(p.h2_term - h2) < 1e-12 * std::abs(h2));
    CHECK(std::abs(p.nh_term - nh) < 1e-10 * std::abs(nh));
}

TEST_CASE("coverage_ratio examples") {
    for (const char* name : table1::kKernels)
        for (double beta : {0.95, 0.8, 0.6})
            for (double r : {kS, -kS, 0.3}) CHECK(std::abs(coverage_ratio(Kernel::from_name(name), 0.0, r, beta) - 1.0) < 1e-12);
    CHECK(std::abs(coverage_ratio(Kernel::epanechnikov(), 1.0, kS, 0.95) - 1.067) <= 0.01);
    CHECK(std::abs(coverage_ratio(Kernel::normal(), 2.0, kS, 0.80) - 1.086) <= 0.01);
    CHECK(std::abs(coverage_ratio(Kernel::uniform(), 0.6, kS, 0.95) - 1.035) <= 0.01);
}

TEST_CASE("coverage_ratio reproduces the published table") {
    double worst = 0.0;
    for (int ki = 0; ki < 3; ++ki) {
        const Kernel k = Kernel::from_name(table1::kKernels[ki]);
        for (int bi = 0; bi < 4; ++bi)
            for (int di = 0; di < 6; ++di) {
                const double g = coverage_ratio(k, table1::kDeltas[di], kS, table1::kBetas[bi]);
                CHECK(std::abs(g - table1::kValues[ki][bi][di]) <= 0.01);
                CHECK(std::abs(coverage_ratio(k, table1::kDeltas[di], -kS, table1::kBetas[bi]) - g) < 1e-9);
                worst = std::max(worst, std::abs(g - table1::kValues[ki][bi][di]));
            }
    }
    MESSAGE("largest deviation from the table: " << worst);
}

TEST_CASE("optimal shift is close to the best r") {
    for (const char* name : table1::kKernels) {
        const Kernel k = Kernel::from_name(name);
        for (double delta : {0.6, 1.0, 2.0}) {
            const double at_opt = coverage_ratio(k, delta, kS, 0.95);
            CHECK(at_opt >= 1.0);
            double best = 0.0;
            for (int i = 0; i <= 198; ++i) {
                const double r = -0.99 + 0.01 * i;
                try {
                    best = std::max(best, coverage_ratio(k, delta, r, 0.95));
                } catch (const SingularRatio&) {
                }
            }
            CAPTURE(name);
            CAPTURE(delta);
            CHECK(best - at_opt <= 0.02);
        }
    }
}

TEST_CASE("coverage_ratio_conditions") {
    // For beta = 0.95 both brackets are negative and z^2 - 3 < 0, so the
    // conditions hold exactly when m''(x) < 0.
    const auto neg = coverage_ratio_conditions(Kernel::epanechnikov(), 1.0, kS, 0.95, -1.0);
    CHECK(neg.local_linear);
    CHECK(neg.variance_reduced);
    CHECK(neg.hold());
    const auto pos = coverage_ratio_conditions(Kernel::epanechnikov(), 1.0, kS, 0.95, 1.0);
    CHECK_FALSE(pos.hold());
    CHECK_FALSE(coverage_ratio_conditions(Kernel::epanechnikov(), 1.0, kS, 0.95, 0.0).hold());
}
