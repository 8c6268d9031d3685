#pragma once

#include <stdexcept>

#include "vrsmooth/combine.hpp"
#include "vrsmooth/kernel.hpp"
#include "vrsmooth/smoother.hpp"

namespace vrsmooth {

class SingularRatio : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// z with P{N(0,1) <= z} = p.
double normal_quantile(double p);
double normal_pdf(double z);
double normal_cdf(double z);

/// One-sided interval (lower, +inf) for m(x).
struct IntervalResult {
    double lower = 0.0;
    double estimate = 0.0;
    double beta = 0.0;
    /// {sigma^2 / w_010}^(1/2) nu^(1/2) (nh)^(-1/2); lower = estimate - z_beta * scale.
    double half_width_scale = 0.0;
    double effective_delta = 0.0;
};

/// Local linear (spec.variant == LocalLinear) or variance-reduced interval.
/// The VR interval uses the variance constant of spec at the boundary-adjusted
/// bin width.
IntervalResult interval(const Dataset& d, const SmootherConfig& cfg, double x, double beta,
                        const CombinerSpec& spec);

struct CoverageOracle {
    double m2;     ///< m''(x)
    double f;      ///< f(x)
    double sigma;  ///< sigma(x)
    double v3;     ///< E[{Y - m(x)}^3 | X = x]
};

/// Two-term Edgeworth prediction of the coverage probability.
struct CoveragePrediction {
    double leading = 0.0;  ///< beta
    double h2_term = 0.0;  ///< (n h^5)^(1/2) order
    double nh_term = 0.0;  ///< (n h)^(-1/2) order
    double total() const { return leading + h2_term + nh_term; }
};

CoveragePrediction coverage_prediction(const CoverageOracle& o, const Kernel& k, double n, double h, double beta,
                                       const CombinerSpec& spec);

/// Limit ratio of optimal one-sided coverage errors, local linear over m~_q
/// with shift r and bin width delta.
double coverage_ratio(const Kernel& k, double delta, double r, double beta);

/// Whether the sign requirements behind coverage_ratio hold for a given m''(x).
struct RatioConditions {
    bool local_linear = false;
    bool variance_reduced = false;
    bool hold() const { return local_linear && variance_reduced; }
};

RatioConditions coverage_ratio_conditions(const Kernel& k, double delta, double r, double beta, double m2);

}  // namespace vrsmooth
