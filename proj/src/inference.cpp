#include "vrsmooth/inference.hpp"

#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "vrsmooth/bandwidth.hpp"
#include "vrsmooth/functionals.hpp"
#include "vrsmooth/vr_estimator.hpp"

namespace vrsmooth {
namespace {

void check_beta(double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("confidence level beta must lie in (0, 1)");
}

// nu_03 (z^2 - 1) - 3 nu_02^2 z^2
double skew_bracket(double nu02, double nu03, double z) {
    const double z2 = z * z;
    return nu03 * (z2 - 1.0) - 3.0 * nu02 * nu02 * z2;
}

}  // namespace

double normal_quantile(double p) {
    check_beta(p);
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double normal_pdf(double z) { return boost::math::pdf(boost::math::normal_distribution<double>(), z); }

double normal_cdf(double z) { return boost::math::cdf(boost::math::normal_distribution<double>(), z); }

IntervalResult interval(const Dataset& d, const SmootherConfig& cfg, double x, double beta,
                        const CombinerSpec& spec) {
    check_beta(beta);
    const double w010 = w_ijk(d, cfg, x, 0, 1, 0, 0.0);
    if (!(w010 > 0.0)) throw EmptyWindow("interval: no observations in the kernel window");

    const auto est = estimate(d, cfg, x, spec);
    CombinerSpec used = spec;
    used.delta = est.effective_delta;
    const double nu = variance_constant(cfg.kernel, used);
    const double n = static_cast<double>(d.size());

    IntervalResult out;
    out.estimate = est.value;
    out.beta = beta;
    out.effective_delta = est.effective_delta;
    out.half_width_scale = std::sqrt(sigma_hat_sq(d, cfg, x) / w010) * std::sqrt(nu) / std::sqrt(n * cfg.h);
    out.lower = est.value - normal_quantile(beta) * out.half_width_scale;
    return out;
}

CoveragePrediction coverage_prediction(const CoverageOracle& o, const Kernel& k, double n, double h, double beta,
                                       const CombinerSpec& spec) {
    check_beta(beta);
    const double z = normal_quantile(beta);
    const double phi = normal_pdf(z);
    const double nu21 = nu_moment(k, 2, 2);
    double nu02 = nu_moment(k, 0, 2);
    double nu03 = nu_moment(k, 0, 3);
    if (spec.variant != Variant::LocalLinear && spec.delta > 0.0) {
        nu02 = effective_nu02(k, spec);
        nu03 = effective_nu03(k, spec);
    }

    CoveragePrediction p;
    p.leading = beta;
    p.h2_term = std::sqrt(n * std::pow(h, 5)) / 4.0 * nu21 / std::sqrt(nu02) / o.sigma * std::sqrt(o.f) * o.m2 *
                (z * z - 3.0) * phi;
    p.nh_term = -1.0 / std::sqrt(n * h) / 6.0 * std::pow(nu02, -1.5) * std::pow(o.sigma, -3.0) / std::sqrt(o.f) *
                o.v3 * skew_bracket(nu02, nu03, z) * phi;
    return p;
}

double coverage_ratio(const Kernel& k, double delta, double r, double beta) {
    const double z = normal_quantile(beta);
    const double nu02 = nu_moment(k, 0, 2);
    const double nu03 = nu_moment(k, 0, 3);
    const double t02 = nu_tilde(k, 2, r, delta);
    const double t03 = nu_tilde(k, 3, r, delta);
    const double num = skew_bracket(nu02, nu03, z);
    const double den = skew_bracket(t02, t03, z);
    if (std::abs(den) < 1e-14) throw SingularRatio("coverage_ratio: variance-reduced bracket vanishes");
    const double q = num / den;
    if (!(q > 0.0)) throw SingularRatio("coverage_ratio: brackets have opposite signs");
    return std::pow(q, 5.0 / 6.0) * std::pow(t02 / nu02, 4.0 / 3.0);
}

RatioConditions coverage_ratio_conditions(const Kernel& k, double delta, double r, double beta, double m2) {
    const double z = normal_quantile(beta);
    const double lead = m2 * (z * z - 3.0);
    RatioConditions c;
    if (lead == 0.0) return c;
    c.local_linear = skew_bracket(nu_moment(k, 0, 2), nu_moment(k, 0, 3), z) / lead < 0.0;
    c.variance_reduced = skew_bracket(nu_tilde(k, 2, r, delta), nu_tilde(k, 3, r, delta), z) / lead < 0.0;
    return c;
}

}  // namespace vrsmooth
