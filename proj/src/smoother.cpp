#include "vrsmooth/smoother.hpp"

#include <cmath>
#include <string>

namespace vrsmooth {
namespace {

constexpr double kSingularTol = 1e-12;

void check_config(const SmootherConfig& cfg) {
    if (!(cfg.h > 0.0) || !std::isfinite(cfg.h)) throw std::domain_error("bandwidth h must be positive and finite");
}

double ridge_term(const Dataset& d) {
    const double n = static_cast<double>(d.size());
    return 1.0 / (n * n);
}

}  // namespace

void check_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error(std::string(what) + ": x must lie in [0, 1]");
}

Dataset::Dataset(std::vector<double> xs, std::vector<double> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.empty()) throw std::invalid_argument("Dataset: no observations");
    if (xs_.size() != ys_.size()) throw std::invalid_argument("Dataset: xs and ys differ in length");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || xs_[i] < 0.0 || xs_[i] > 1.0)
            throw std::invalid_argument("Dataset: x[" + std::to_string(i) + "] outside [0, 1]");
        if (!std::isfinite(ys_[i])) throw std::invalid_argument("Dataset: y[" + std::to_string(i) + "] not finite");
    }
}

Dataset Dataset::with_responses(std::vector<double> ys) const { return Dataset(xs_, std::move(ys)); }

WeightedSums weighted_sums(const Dataset& d, const SmootherConfig& cfg, double x) {
    check_config(cfg);
    const auto xs = d.xs();
    const auto ys = d.ys();
    const double inv_h = 1.0 / cfg.h;
    WeightedSums s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = x - xs[i];
        // h * K_h(dx) = K(dx / h)
        const double w = cfg.kernel(dx * inv_h);
        if (w == 0.0) continue;
        const double wd = w * dx;
        s.s0 += w;
        s.s1 += wd;
        s.s2 += wd * dx;
        s.t0 += w * ys[i];
        s.t1 += wd * ys[i];
    }
    return s;
}

std::optional<double> try_local_linear(const Dataset& d, const SmootherConfig& cfg, double x) {
    check_unit_interval(x, "local_linear");
    const auto s = weighted_sums(d, cfg, x);
    const double num = s.s2 * s.t0 - s.s1 * s.t1;
    double den = s.s0 * s.s2 - s.s1 * s.s1;
    if (cfg.ridge) return num / (den + ridge_term(d));
    const double scale = s.s0 * s.s2;
    if (!(scale > 0.0) || std::abs(den) <= kSingularTol * scale) return std::nullopt;
    return num / den;
}

double local_linear(const Dataset& d, const SmootherConfig& cfg, double x) {
    auto v = try_local_linear(d, cfg, x);
    if (!v) throw SingularDesign("local linear denominator is singular at x = " + std::to_string(x));
    return *v;
}

std::vector<double> local_linear_weights(const Dataset& d, const SmootherConfig& cfg, double x) {
    check_unit_interval(x, "local_linear_weights");
    const auto s = weighted_sums(d, cfg, x);
    double den = s.s0 * s.s2 - s.s1 * s.s1;
    if (cfg.ridge) {
        den += ridge_term(d);
    } else if (!(s.s0 * s.s2 > 0.0) || std::abs(den) <= kSingularTol * s.s0 * s.s2) {
        throw SingularDesign("local linear denominator is singular at x = " + std::to_string(x));
    }
    const auto xs = d.xs();
    std::vector<double> out(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = x - xs[i];
        const double w = cfg.kernel(dx / cfg.h);
        out[i] = w * (s.s2 - s.s1 * dx) / den;
    }
    return out;
}

double w_ijk(const Dataset& d, const SmootherConfig& cfg, double x, int i, int j, int k, double m_x) {
    check_config(cfg);
    if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 3)
        throw std::domain_error("w_ijk: need i <= 2, j <= 2, k <= 3");
    const auto xs = d.xs();
    const auto ys = d.ys();
    const double h = cfg.h;
    double sum = 0.0;
    for (std::size_t l = 0; l < xs.size(); ++l) {
        const double dx = x - xs[l];
        const double kh = cfg.kernel(dx / h) / h;
        if (kh == 0.0 && j > 0) continue;
        sum += std::pow(dx, i) * std::pow(kh, j) * std::pow(ys[l] - m_x, k);
    }
    return sum * std::pow(h, j - i - 1) / static_cast<double>(xs.size());
}

double sigma_hat_sq(const Dataset& d, const SmootherConfig& cfg, double x) {
    check_unit_interval(x, "sigma_hat_sq");
    const double w010 = w_ijk(d, cfg, x, 0, 1, 0, 0.0);
    if (!(w010 > 0.0)) throw EmptyWindow("no observations in the kernel window at x = " + std::to_string(x));
    const double fit = local_linear(d, cfg, x);
    const auto xs = d.xs();
    const auto ys = d.ys();
    double sum = 0.0;
    for (std::size_t l = 0; l < xs.size(); ++l) {
        const double kh = cfg.kernel((x - xs[l]) / cfg.h) / cfg.h;
        if (kh == 0.0) continue;
        const double e = ys[l] - fit;
        sum += kh * e * e;
    }
    return sum / static_cast<double>(xs.size()) / w010;
}

}  // namespace vrsmooth
