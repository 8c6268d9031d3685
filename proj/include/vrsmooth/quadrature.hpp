#pragma once

#include <functional>
#include <span>

namespace vrsmooth::quad {

struct Options {
    double rel_tol = 1e-13;
    unsigned max_depth = 20;
};

/// Adaptive Gauss-Kronrod integral of f over [a, b].
///
/// The interval is first split at every breakpoint strictly inside (a, b);
/// integrands that are only piecewise smooth (compact kernels, shifted
/// products of them) converge fast once their kinks sit on panel edges.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints = {}, const Options& opts = {});

}  // namespace vrsmooth::quad
