#include "vrsmooth/combine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vrsmooth {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::LocalLinear: return "ll";
        case Variant::Q: return "q";
        case Variant::Plus: return "plus";
        case Variant::Minus: return "minus";
        case Variant::Average: return "avg";
    }
    return "?";
}

Variant variant_from_string(std::string_view s) {
    if (s == "ll" || s == "local_linear") return Variant::LocalLinear;
    if (s == "q") return Variant::Q;
    if (s == "plus") return Variant::Plus;
    if (s == "minus") return Variant::Minus;
    if (s == "avg" || s == "average") return Variant::Average;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

std::array<double, 3> coeffs_a(double r) {
    if (!(std::abs(r) < 1.0)) throw std::domain_error("coeffs_a: shift r must satisfy |r| < 1");
    return {0.5 * r * (r - 1.0), 1.0 - r * r, 0.5 * r * (r + 1.0)};
}

std::array<double, 3> coeffs_b(double r, double k) {
    if (!(k > 0.0) || k == 1.0) throw std::domain_error("coeffs_b: require k > 0 and k != 1");
    return {r * (r - 1.0) / (k * (k + 1.0)), -(r + k) * (r - 1.0) / k, r * (r + k) / (k + 1.0)};
}

GridOffsets grid_offsets(double x, double r, double delta, double h) {
    if (!(h > 0.0)) throw std::domain_error("grid_offsets: bandwidth must be positive");
    if (!(delta >= 0.0)) throw std::domain_error("grid_offsets: delta must be nonnegative");
    GridOffsets g;
    g.omega = delta * h;
    for (int j = 0; j < 3; ++j) g.alpha[j] = x - (r + 1.0 - j) * g.omega;
    return g;
}

double boundary_delta(double x, double delta, double h, double reach) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("boundary_delta: x must lie in [0, 1]");
    if (!(h > 0.0)) throw std::domain_error("boundary_delta: bandwidth must be positive");
    const double scale = reach * h;
    return std::min({delta, x / scale, (1.0 - x) / scale});
}

CombinerSpec CombinerSpec::q(double r, double delta) {
    if (!(std::abs(r) < 1.0)) throw std::domain_error("CombinerSpec::q: |r| < 1 required");
    return {Variant::Q, r, delta};
}

double CombinerSpec::shift() const {
    switch (variant) {
        case Variant::LocalLinear: return 0.0;
        case Variant::Plus: return kOptimalShift;
        case Variant::Minus: return -kOptimalShift;
        case Variant::Q:
        case Variant::Average: return r;
    }
    return r;
}

double CombinerSpec::reach() const {
    if (variant == Variant::Q) return std::max(kPlusMinusReach, 1.0 + std::abs(r));
    return kPlusMinusReach;
}

std::vector<WeightedShift> CombinerSpec::effective_terms(double d) const {
    auto single = [d](double shift, double scale, std::vector<WeightedShift>& out) {
        auto a = coeffs_a(shift);
        for (int j = 0; j < 3; ++j)
            if (a[j] != 0.0) out.push_back({scale * a[j], (shift + 1.0 - j) * d});
    };
    std::vector<WeightedShift> out;
    switch (variant) {
        case Variant::LocalLinear:
            out.push_back({1.0, 0.0});
            break;
        case Variant::Q:
        case Variant::Plus:
        case Variant::Minus:
            single(shift(), 1.0, out);
            break;
        case Variant::Average:
            single(kOptimalShift, 0.5, out);
            single(-kOptimalShift, 0.5, out);
            break;
    }
    return out;
}

}  // namespace vrsmooth
