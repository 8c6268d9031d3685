#include "vrsmooth/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace vrsmooth {

Kernel::Kernel(KernelId id, std::string name, double radius, bool compact, std::vector<double> breakpoints,
               std::function<double(double)> density)
    : id_(id),
      name_(std::move(name)),
      radius_(radius),
      compact_(compact),
      breakpoints_(std::move(breakpoints)),
      density_(std::move(density)) {}

Kernel Kernel::uniform() { return Kernel(KernelId::Uniform, "uniform", 1.0, true, {-1.0, 1.0}); }

Kernel Kernel::epanechnikov() { return Kernel(KernelId::Epanechnikov, "epanechnikov", 1.0, true, {-1.0, 1.0}); }

Kernel Kernel::normal() { return Kernel(KernelId::Normal, "normal", 12.0, false, {}); }

Kernel Kernel::custom(std::string name, std::function<double(double)> density, double radius, bool compact,
                      std::vector<double> breakpoints) {
    if (!density) throw std::invalid_argument("custom kernel: empty density");
    if (!(radius > 0.0)) throw std::invalid_argument("custom kernel: radius must be positive");
    if (compact) {
        breakpoints.push_back(-radius);
        breakpoints.push_back(radius);
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    return Kernel(KernelId::Custom, std::move(name), radius, compact, std::move(breakpoints), std::move(density));
}

Kernel Kernel::from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "uniform") return uniform();
    if (lower == "epanechnikov") return epanechnikov();
    if (lower == "normal" || lower == "gaussian") return normal();
    throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

}  // namespace vrsmooth
