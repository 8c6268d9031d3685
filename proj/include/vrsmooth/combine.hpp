#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace vrsmooth {

/// 1/sqrt(2): the shift that maximises r^2 (1 - r^2).
inline constexpr double kOptimalShift = 0.70710678118654752440;

/// Reach of the +-1/sqrt(2) grids in units of omega = delta * h.
inline constexpr double kPlusMinusReach = 1.0 + kOptimalShift;

enum class Variant { LocalLinear, Q, Plus, Minus, Average };

std::string_view to_string(Variant v);
/// Accepts "ll", "q", "plus", "minus", "avg" (and long forms).
Variant variant_from_string(std::string_view s);

/// Quadratic-interpolation weights (A_0, A_1, A_2) for shift r, |r| < 1.
std::array<double, 3> coeffs_a(double r);

/// Weights for the generalised grid x - r w, x - (r - k) w, x - (r - k - 1) w.
/// Requires k > 0, k != 1.
std::array<double, 3> coeffs_b(double r, double k);

struct GridOffsets {
    std::array<double, 3> alpha{};  ///< alpha_j = x - (r + 1 - j) * omega
    double omega = 0.0;             ///< grid spacing delta * h
};

GridOffsets grid_offsets(double x, double r, double delta, double h);

/// Bin width actually usable at x in [0, 1]: delta shrunk so that every grid
/// point with the given reach stays inside the estimation domain.
double boundary_delta(double x, double delta, double h, double reach = kPlusMinusReach);

/// One term of an effective kernel: weight * K(s - shift).
struct WeightedShift {
    double weight;
    double shift;
};

/// Variant, shift and bin width of a combined estimator.
struct CombinerSpec {
    Variant variant = Variant::LocalLinear;
    double r = 0.0;
    double delta = 0.0;

    static CombinerSpec local_linear() { return {}; }
    static CombinerSpec q(double r, double delta);
    static CombinerSpec plus(double delta) { return {Variant::Plus, kOptimalShift, delta}; }
    static CombinerSpec minus(double delta) { return {Variant::Minus, -kOptimalShift, delta}; }
    static CombinerSpec average(double delta) { return {Variant::Average, kOptimalShift, delta}; }

    /// Shift used by single-grid variants (0 for local linear).
    double shift() const;

    /// Distance from x to the furthest grid point, in units of omega.
    /// Never below the +-1/sqrt(2) reach so all variants share one boundary rule.
    double reach() const;

    /// Terms of the equivalent kernel in s = (x - X) / h for bin width delta.
    std::vector<WeightedShift> effective_terms(double delta) const;
};

}  // namespace vrsmooth
