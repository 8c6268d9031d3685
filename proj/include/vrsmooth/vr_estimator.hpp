#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vrsmooth/combine.hpp"
#include "vrsmooth/smoother.hpp"

namespace vrsmooth {

struct VREstimate {
    double value = 0.0;
    Variant variant = Variant::LocalLinear;
    /// Bin width after the boundary rule; never above the requested delta.
    double effective_delta = 0.0;
    /// One grid per sided combination (two for the average variant).
    std::vector<GridOffsets> grids;
};

/// sum_j A_j(r) m^(alpha_j) at the boundary-adjusted bin width.
VREstimate m_tilde_q(const Dataset& d, const SmootherConfig& cfg, double x, double r, double delta);

/// m_tilde_q with r = sign / sqrt(2); sign must be +1 or -1.
VREstimate m_tilde_pm(const Dataset& d, const SmootherConfig& cfg, double x, double delta, int sign);

/// Mean of the two sided estimates sharing one effective bin width.
VREstimate m_tilde_a(const Dataset& d, const SmootherConfig& cfg, double x, double delta);

/// Dispatches on spec.variant. Local linear is reported with a degenerate grid.
VREstimate estimate(const Dataset& d, const SmootherConfig& cfg, double x, const CombinerSpec& spec);

struct FitPoint {
    double x = 0.0;
    std::optional<VREstimate> estimate;
    std::string error;  ///< set when estimate is empty
};

/// Pointwise estimates over a grid. Failures at single points are recorded in
/// the returned FitPoint rather than thrown.
std::vector<FitPoint> fit_curve(const Dataset& d, const SmootherConfig& cfg, const CombinerSpec& spec,
                                std::span<const double> grid);

/// Equivalent observation weights of any variant at x (sum to 1 unridged).
std::vector<double> estimator_weights(const Dataset& d, const SmootherConfig& cfg, double x,
                                      const CombinerSpec& spec);

/// Equispaced grid of `size` points over [0, 1].
std::vector<double> unit_grid(std::size_t size);

}  // namespace vrsmooth
