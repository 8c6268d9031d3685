#include "vrsmooth/functionals.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vrsmooth/quadrature.hpp"

namespace vrsmooth {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// Panel edges for an integrand built from K(s - c) for each shift c.
std::vector<double> shifted_breakpoints(const Kernel& k, std::span<const double> shifts) {
    std::vector<double> pts;
    for (double c : shifts)
        for (double b : k.breakpoints()) pts.push_back(b + c);
    return pts;
}

template <class F>
double integrate_shifted(const Kernel& k, std::span<const double> shifts, F&& f) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        double a = shifts[i] - k.radius();
        double b = shifts[i] + k.radius();
        lo = i == 0 ? a : std::min(lo, a);
        hi = i == 0 ? b : std::max(hi, b);
    }
    auto pts = shifted_breakpoints(k, shifts);
    return quad::integrate(std::forward<F>(f), lo, hi, pts);
}

}  // namespace

double nu_moment(const Kernel& k, int i, int j) {
    if (i < 0 || i > 4 || j < 1 || j > 3) throw std::domain_error("nu_moment: need 0 <= i <= 4 and 1 <= j <= 3");
    if (i % 2 == 1) return 0.0;
    const double zero[] = {0.0};
    return integrate_shifted(k, zero, [&](double s) { return std::pow(s, i) * std::pow(k(s), j); });
}

KernelFunctionals functionals(const Kernel& k) {
    return {nu_moment(k, 2, 1), nu_moment(k, 0, 2), nu_moment(k, 2, 2), nu_moment(k, 0, 3)};
}

double overlap_c(const Kernel& k, double a, double delta) {
    const double c = a * delta;
    if (k.compact() && 2.0 * c >= 2.0 * k.radius()) return 0.0;
    const double shifts[] = {c, -c};
    return integrate_shifted(k, shifts, [&](double t) { return k(t - c) * k(t + c); });
}

double c_delta(const Kernel& k, double delta) {
    if (delta == 0.0) return 0.0;
    return 1.5 * overlap_c(k, 0.0, delta) - 2.0 * overlap_c(k, 0.5, delta) + 0.5 * overlap_c(k, 1.0, delta);
}

double d_delta(const Kernel& k, double delta) {
    if (delta == 0.0) return 0.0;
    const double half = 0.5 * delta;
    const double bracket = 4.0 * (1.0 + kSqrt2) * overlap_c(k, kSqrt2 - 1.0, half) +
                           (3.0 + 2.0 * kSqrt2) * overlap_c(k, 2.0 - kSqrt2, half) +
                           2.0 * overlap_c(k, kSqrt2, half) +
                           4.0 * (1.0 - kSqrt2) * overlap_c(k, kSqrt2 + 1.0, half) +
                           (3.0 - 2.0 * kSqrt2) * overlap_c(k, kSqrt2 + 2.0, half);
    return overlap_c(k, 0.0, delta) - 0.25 * c_delta(k, delta) - bracket / 16.0;
}

double nu_tilde(const Kernel& k, int l, double r, double delta) {
    if (l != 2 && l != 3) throw std::domain_error("nu_tilde: l must be 2 or 3");
    const auto a = coeffs_a(r);
    const double shifts[] = {0.0, -delta, -2.0 * delta};
    return integrate_shifted(k, shifts, [&](double s) {
        double v = a[0] * k(s) + a[1] * k(s + delta) + a[2] * k(s + 2.0 * delta);
        return l == 2 ? v * v : v * v * v;
    });
}

double tau(const Kernel& k, double delta, double r, double kk) {
    const auto b = coeffs_b(r, kk);
    const double half = 0.5 * delta;
    return overlap_c(k, 0.0, delta) * (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]) +
           2.0 * b[0] * b[1] * overlap_c(k, kk, half) + 2.0 * b[0] * b[2] * overlap_c(k, kk + 1.0, half) +
           2.0 * b[1] * b[2] * overlap_c(k, 1.0, half);
}

double effective_moment(const Kernel& k, std::span<const WeightedShift> terms, int l) {
    if (terms.empty()) throw std::invalid_argument("effective_moment: no terms");
    if (l < 1 || l > 3) throw std::domain_error("effective_moment: l must be 1, 2 or 3");
    std::vector<double> shifts;
    for (const auto& t : terms) shifts.push_back(t.shift);
    return integrate_shifted(k, shifts, [&](double s) {
        double v = 0.0;
        for (const auto& t : terms) v += t.weight * k(s - t.shift);
        return std::pow(v, l);
    });
}

double effective_nu02(const Kernel& k, const CombinerSpec& spec) {
    return effective_moment(k, spec.effective_terms(spec.delta), 2);
}

double effective_nu03(const Kernel& k, const CombinerSpec& spec) {
    return effective_moment(k, spec.effective_terms(spec.delta), 3);
}

}  // namespace vrsmooth
