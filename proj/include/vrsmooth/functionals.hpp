#pragma once

#include <span>

#include "vrsmooth/combine.hpp"
#include "vrsmooth/kernel.hpp"

namespace vrsmooth {

/// Moments nu_ij = int s^i K(s)^j ds needed by the variance and coverage
/// formulas.
struct KernelFunctionals {
    double nu20;
    double nu02;
    double nu21;
    double nu03;
};

/// int s^i K(s)^j ds for 0 <= i <= 4, 1 <= j <= 3. Odd i gives exactly 0.
double nu_moment(const Kernel& k, int i, int j);

KernelFunctionals functionals(const Kernel& k);

/// Overlap C(a, delta) = int K(t - a delta) K(t + a delta) dt.
double overlap_c(const Kernel& k, double a, double delta);

/// C(delta) = 1.5 C(0, delta) - 2 C(0.5, delta) + 0.5 C(1, delta).
double c_delta(const Kernel& k, double delta);

/// Extra variance reduction D(delta) gained by averaging the +-1/sqrt(2)
/// estimators.
double d_delta(const Kernel& k, double delta);

/// nu~_0l = int { sum_i A_i(r) K(s + i delta) }^l ds for l in {2, 3}.
double nu_tilde(const Kernel& k, int l, double r, double delta);

/// Asymptotic variance factor of the generalised three-point combination with
/// weights coeffs_b(r, kk).
double tau(const Kernel& k, double delta, double r, double kk);

/// int { sum_t w_t K(s - c_t) }^l ds for an arbitrary effective kernel.
double effective_moment(const Kernel& k, std::span<const WeightedShift> terms, int l);

/// Variance factor (nu_02 analogue) of any combined estimator, computed from
/// its effective kernel.
double effective_nu02(const Kernel& k, const CombinerSpec& spec);
double effective_nu03(const Kernel& k, const CombinerSpec& spec);

}  // namespace vrsmooth
