#include "vrsmooth/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vrsmooth/inference.hpp"

namespace vrsmooth {
namespace {

// Standard normal mass of the truncation window of each design.
struct Truncation {
    double mean;
    double sd;
    double lo_cdf;
    double hi_cdf;
};

Truncation truncation(Design d) {
    switch (d) {
        case Design::TruncNormalA:
            return {0.5, 0.5, normal_cdf(-1.0), normal_cdf(1.0)};
        case Design::TruncNormalB:
            return {0.0, 1.0, normal_cdf(0.0), normal_cdf(1.0)};
        case Design::Uniform01:
            break;
    }
    return {0.0, 1.0, 0.0, 1.0};
}

}  // namespace

std::string_view to_string(Regression r) {
    switch (r) {
        case Regression::Bimodal: return "bimodal";
        case Regression::LinearPeak: return "linear_peak";
        case Regression::Sine: return "sine";
    }
    return "?";
}

std::string_view to_string(Design d) {
    switch (d) {
        case Design::Uniform01: return "uniform";
        case Design::TruncNormalA: return "truncnormal_a";
        case Design::TruncNormalB: return "truncnormal_b";
    }
    return "?";
}

Regression regression_from_string(std::string_view s) {
    if (s == "bimodal") return Regression::Bimodal;
    if (s == "linear_peak") return Regression::LinearPeak;
    if (s == "sine") return Regression::Sine;
    throw std::invalid_argument("unknown regression '" + std::string(s) + "'");
}

Design design_from_string(std::string_view s) {
    if (s == "uniform") return Design::Uniform01;
    if (s == "truncnormal_a") return Design::TruncNormalA;
    if (s == "truncnormal_b") return Design::TruncNormalB;
    throw std::invalid_argument("unknown design '" + std::string(s) + "'");
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
    engine_.seed(seq);
}

double RngStream::uniform() {
    // 53 random bits, shifted by half an ulp so 0 and 1 are excluded.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() { return normal_quantile(uniform()); }

double Scenario::sigma0() const {
    switch (regression) {
        case Regression::Bimodal: return 0.1;
        case Regression::LinearPeak: return std::sqrt(0.5);
        case Regression::Sine: return 0.5;
    }
    return 1.0;
}

double Scenario::m(double x) const {
    switch (regression) {
        case Regression::Bimodal:
            return 0.3 * std::exp(-16.0 * (x - 0.25) * (x - 0.25)) + 0.7 * std::exp(-64.0 * (x - 0.75) * (x - 0.75));
        case Regression::LinearPeak:
            return 2.0 - 5.0 * x + 5.0 * std::exp(-400.0 * (x - 0.5) * (x - 0.5));
        case Regression::Sine:
            return std::sin(5.0 * std::numbers::pi * x);
    }
    return 0.0;
}

double Scenario::dm(double x) const {
    switch (regression) {
        case Regression::Bimodal: {
            const double a = x - 0.25, b = x - 0.75;
            return 0.3 * (-32.0 * a) * std::exp(-16.0 * a * a) + 0.7 * (-128.0 * b) * std::exp(-64.0 * b * b);
        }
        case Regression::LinearPeak: {
            const double a = x - 0.5;
            return -5.0 + 5.0 * (-800.0 * a) * std::exp(-400.0 * a * a);
        }
        case Regression::Sine:
            return 5.0 * std::numbers::pi * std::cos(5.0 * std::numbers::pi * x);
    }
    return 0.0;
}

double Scenario::d2m(double x) const {
    switch (regression) {
        case Regression::Bimodal: {
            const double a = x - 0.25, b = x - 0.75;
            return 0.3 * ((32.0 * a) * (32.0 * a) - 32.0) * std::exp(-16.0 * a * a) +
                   0.7 * ((128.0 * b) * (128.0 * b) - 128.0) * std::exp(-64.0 * b * b);
        }
        case Regression::LinearPeak: {
            const double a = x - 0.5;
            return 5.0 * ((800.0 * a) * (800.0 * a) - 800.0) * std::exp(-400.0 * a * a);
        }
        case Regression::Sine: {
            const double w = 5.0 * std::numbers::pi;
            return -w * w * std::sin(w * x);
        }
    }
    return 0.0;
}

double Scenario::density(double x) const {
    if (x < 0.0 || x > 1.0) return 0.0;
    if (design == Design::Uniform01) return 1.0;
    const auto t = truncation(design);
    return normal_pdf((x - t.mean) / t.sd) / t.sd / (t.hi_cdf - t.lo_cdf);
}

double Scenario::design_quantile(double u) const {
    if (design == Design::Uniform01) return u;
    const auto t = truncation(design);
    const double p = t.lo_cdf + u * (t.hi_cdf - t.lo_cdf);
    return std::clamp(t.mean + t.sd * normal_quantile(p), 0.0, 1.0);
}

Dataset sample(const Scenario& s, std::size_t n, RngStream& stream) {
    if (n == 0) throw std::invalid_argument("sample: n must be positive");
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    const double sigma = s.sigma();
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = s.design_quantile(stream.uniform());
        const double eps = stream.normal();
        ys[i] = s.m(xs[i]) + sigma * eps;
    }
    return Dataset(std::move(xs), std::move(ys));
}

}  // namespace vrsmooth
