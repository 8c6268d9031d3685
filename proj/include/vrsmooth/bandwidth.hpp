#pragma once

#include "vrsmooth/combine.hpp"
#include "vrsmooth/kernel.hpp"

namespace vrsmooth {

/// Pointwise oracle quantities at the estimation point.
struct LocalOracle {
    double m2;      ///< m''(x)
    double f;       ///< design density f(x)
    double sigma2;  ///< conditional variance sigma^2(x)
    double n;       ///< sample size
};

/// Leading-order variance constant of an estimator: nu_02 for local linear,
/// nu_02 - r^2 (1 - r^2) C(delta) for Q(r), nu_02 - C/4 for +-, and
/// nu_02 - C/4 - D/2 for the average.
double variance_constant(const Kernel& k, const CombinerSpec& spec);

/// AMSE-optimal local bandwidth of the local linear estimator.
double h0_local(const LocalOracle& o, const Kernel& k);

/// Constant multiplier turning a local linear bandwidth (local or global)
/// into the optimal one for `spec`.
double adjust_factor(const Kernel& k, const CombinerSpec& spec);

double adjust_h(double h0, const Kernel& k, const CombinerSpec& spec);

/// Optimal AMSE attained by `spec` with its own optimal bandwidth.
double amse(const LocalOracle& o, const Kernel& k, const CombinerSpec& spec);

/// First-order MSE (squared bias + variance) at a given bandwidth.
double amse_at(const LocalOracle& o, const Kernel& k, const CombinerSpec& spec, double h);

/// Relative efficiency of m~_+- (gamma_q) and m~_a (gamma_a) to local linear.
double gamma_q(const Kernel& k, double delta);
double gamma_a(const Kernel& k, double delta);

}  // namespace vrsmooth
