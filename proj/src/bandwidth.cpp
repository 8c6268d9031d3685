#include "vrsmooth/bandwidth.hpp"

#include <cmath>
#include <stdexcept>

#include "vrsmooth/functionals.hpp"

namespace vrsmooth {
namespace {

void check_oracle(const LocalOracle& o) {
    if (!(o.f > 0.0)) throw std::domain_error("oracle design density must be positive");
    if (!(o.sigma2 > 0.0)) throw std::domain_error("oracle variance must be positive");
    if (!(o.n > 0.0)) throw std::domain_error("sample size must be positive");
    if (o.m2 == 0.0) throw std::domain_error("m''(x) = 0: optimal bandwidth is unbounded");
}

}  // namespace

double variance_constant(const Kernel& k, const CombinerSpec& spec) {
    const double nu02 = nu_moment(k, 0, 2);
    switch (spec.variant) {
        case Variant::LocalLinear:
            return nu02;
        case Variant::Q: {
            const double r2 = spec.r * spec.r;
            return nu02 - r2 * (1.0 - r2) * c_delta(k, spec.delta);
        }
        case Variant::Plus:
        case Variant::Minus:
            return nu02 - 0.25 * c_delta(k, spec.delta);
        case Variant::Average:
            return nu02 - 0.25 * c_delta(k, spec.delta) - 0.5 * d_delta(k, spec.delta);
    }
    return nu02;
}

double h0_local(const LocalOracle& o, const Kernel& k) {
    check_oracle(o);
    const double nu02 = nu_moment(k, 0, 2);
    const double nu20 = nu_moment(k, 2, 1);
    return std::pow(o.sigma2 * nu02, 0.2) * std::pow(o.n * o.f * o.m2 * o.m2 * nu20 * nu20, -0.2);
}

double adjust_factor(const Kernel& k, const CombinerSpec& spec) {
    const double v = variance_constant(k, spec);
    if (!(v > 0.0)) throw std::logic_error("variance constant is not positive");
    return std::pow(v / nu_moment(k, 0, 2), 0.2);
}

double adjust_h(double h0, const Kernel& k, const CombinerSpec& spec) {
    if (!(h0 > 0.0)) throw std::domain_error("adjust_h: h0 must be positive");
    return adjust_factor(k, spec) * h0;
}

double amse(const LocalOracle& o, const Kernel& k, const CombinerSpec& spec) {
    check_oracle(o);
    const double nu20 = nu_moment(k, 2, 1);
    const double v = variance_constant(k, spec);
    const double s8 = std::pow(o.sigma2, 4.0);
    return 1.25 * std::pow(o.m2 * o.m2 * nu20 * nu20 * s8 / std::pow(o.f, 4.0), 0.2) * std::pow(v, 0.8) *
           std::pow(o.n, -0.8);
}

double amse_at(const LocalOracle& o, const Kernel& k, const CombinerSpec& spec, double h) {
    check_oracle(o);
    const double bias = 0.5 * o.m2 * nu_moment(k, 2, 1) * h * h;
    return bias * bias + o.sigma2 * variance_constant(k, spec) / (o.n * h * o.f);
}

double gamma_q(const Kernel& k, double delta) {
    const double nu02 = nu_moment(k, 0, 2);
    return std::pow(nu02 / variance_constant(k, CombinerSpec::plus(delta)), 0.8);
}

double gamma_a(const Kernel& k, double delta) {
    const double nu02 = nu_moment(k, 0, 2);
    return std::pow(nu02 / variance_constant(k, CombinerSpec::average(delta)), 0.8);
}

}  // namespace vrsmooth
