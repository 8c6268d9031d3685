#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vrsmooth {

enum class KernelId { Uniform, Epanechnikov, Normal, Custom };

/// Symmetric probability density used as a smoothing kernel.
///
/// Compact kernels live on [-radius, radius]. The Normal kernel is unbounded;
/// its radius is the truncation point used for quadrature (tail mass below
/// 1e-30 at 12).
class Kernel {
public:
    static Kernel uniform();
    static Kernel epanechnikov();
    static Kernel normal();

    /// User-supplied symmetric density. `breakpoints` lists points where the
    /// density or its derivative is discontinuous (e.g. +-radius for compact
    /// kernels); they become panel edges for quadrature.
    static Kernel custom(std::string name, std::function<double(double)> density, double radius,
                         bool compact, std::vector<double> breakpoints = {});

    /// Parses "uniform", "epanechnikov" or "normal" (case-insensitive).
    static Kernel from_name(std::string_view name);

    double operator()(double u) const noexcept {
        switch (id_) {
            case KernelId::Uniform:
                return (u > -1.0 && u < 1.0) ? 0.5 : 0.0;
            case KernelId::Epanechnikov:
                return (u > -1.0 && u < 1.0) ? 0.75 * (1.0 - u * u) : 0.0;
            case KernelId::Normal:
                return kInvSqrt2Pi * std::exp(-0.5 * u * u);
            case KernelId::Custom:
                break;
        }
        return density_(u);
    }

    KernelId id() const noexcept { return id_; }
    const std::string& name() const noexcept { return name_; }
    bool compact() const noexcept { return compact_; }
    double radius() const noexcept { return radius_; }
    std::span<const double> breakpoints() const noexcept { return breakpoints_; }

private:
    static constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

    Kernel(KernelId id, std::string name, double radius, bool compact, std::vector<double> breakpoints,
           std::function<double(double)> density = {});

    KernelId id_;
    std::string name_;
    double radius_;
    bool compact_;
    std::vector<double> breakpoints_;
    std::function<double(double)> density_;
};

}  // namespace vrsmooth
