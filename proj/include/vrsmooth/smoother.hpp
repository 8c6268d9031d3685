#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vrsmooth/kernel.hpp"

namespace vrsmooth {

/// The local linear denominator vanished (too few distinct points in the window).
class SingularDesign : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No observation received positive kernel weight.
class EmptyWindow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Paired observations with covariates already rescaled to [0, 1].
class Dataset {
public:
    Dataset(std::vector<double> xs, std::vector<double> ys);

    std::size_t size() const noexcept { return xs_.size(); }
    std::span<const double> xs() const noexcept { return xs_; }
    std::span<const double> ys() const noexcept { return ys_; }

    /// Same design with replaced responses.
    Dataset with_responses(std::vector<double> ys) const;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

struct SmootherConfig {
    Kernel kernel = Kernel::epanechnikov();
    double h = 0.1;
    /// Add n^-2 to the denominator so the estimator is always defined.
    bool ridge = false;
};

struct WeightedSums {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double t0 = 0.0;
    double t1 = 0.0;
};

/// S_l = h sum (x - X_i)^l K_h(x - X_i), T_l likewise weighted by Y_i.
WeightedSums weighted_sums(const Dataset& d, const SmootherConfig& cfg, double x);

/// Local linear fit at x; nullopt if the unridged denominator is singular.
std::optional<double> try_local_linear(const Dataset& d, const SmootherConfig& cfg, double x);

/// Local linear fit at x. Throws SingularDesign when unridged and degenerate.
double local_linear(const Dataset& d, const SmootherConfig& cfg, double x);

/// Equivalent weights l_i with local_linear(x) = sum l_i Y_i.
std::vector<double> local_linear_weights(const Dataset& d, const SmootherConfig& cfg, double x);

/// w_ijk(x) = n^-1 h^(j-i-1) sum (x - X)^i K_h(x - X)^j (Y - m_x)^k.
double w_ijk(const Dataset& d, const SmootherConfig& cfg, double x, int i, int j, int k, double m_x);

/// Kernel-weighted residual variance around the local linear fit at x.
double sigma_hat_sq(const Dataset& d, const SmootherConfig& cfg, double x);

void check_unit_interval(double x, const char* what);

}  // namespace vrsmooth
