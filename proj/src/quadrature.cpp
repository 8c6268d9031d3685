#include "vrsmooth/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace vrsmooth::quad {

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints, const Options& opts) {
    if (!(b >= a)) throw std::invalid_argument("integrate: require a <= b");
    if (a == b) return 0.0;

    std::vector<double> edges{a};
    for (double p : breakpoints)
        if (p > a && p < b) edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    // Breakpoints that differ only by rounding would leave sliver panels
    // straddling a jump, which the adaptive rule refines to max depth.
    const double merge_tol = 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [merge_tol](double x, double y) { return y - x <= merge_tol; }),
                edges.end());
    edges.back() = b;

    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double err = 0.0;
        total += GK::integrate(f, edges[i], edges[i + 1], opts.max_depth, opts.rel_tol, &err);
    }
    return total;
}

}  // namespace vrsmooth::quad
