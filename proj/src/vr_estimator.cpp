#include "vrsmooth/vr_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vrsmooth {
namespace {

struct Term {
    double weight;
    double point;
};

// Grid points clamped to [0, 1]: the boundary rule keeps them inside up to
// rounding in x - reach * (x / (reach h)) * h.
GridOffsets clamped_grid(double x, double r, double delta, double h) {
    auto g = grid_offsets(x, r, delta, h);
    for (auto& a : g.alpha) a = std::clamp(a, 0.0, 1.0);
    return g;
}

struct Plan {
    Variant variant;
    double effective_delta;
    std::vector<GridOffsets> grids;
    std::vector<Term> terms;  // empty when the estimator collapses to m^(x)
};

Plan make_plan(double x, double h, const CombinerSpec& spec) {
    check_unit_interval(x, "estimate");
    if (!(h > 0.0)) throw std::domain_error("bandwidth h must be positive");
    if (!(spec.delta >= 0.0)) throw std::domain_error("delta must be nonnegative");
    Plan p{spec.variant, 0.0, {}, {}};
    if (spec.variant == Variant::LocalLinear) {
        p.grids.push_back(grid_offsets(x, 0.0, 0.0, h));
        return p;
    }
    const double de = boundary_delta(x, spec.delta, h, spec.reach());
    p.effective_delta = de;
    auto add_side = [&](double r, double scale) {
        const auto a = coeffs_a(r);
        auto g = clamped_grid(x, r, de, h);
        p.grids.push_back(g);
        if (g.omega == 0.0) return;
        for (int j = 0; j < 3; ++j)
            if (a[j] != 0.0) p.terms.push_back({scale * a[j], g.alpha[j]});
    };
    if (spec.variant == Variant::Average) {
        add_side(kOptimalShift, 0.5);
        add_side(-kOptimalShift, 0.5);
    } else {
        add_side(spec.shift(), 1.0);
    }
    // r = 0 or a zero bin width: the single surviving term is m^(x) itself.
    if (p.terms.size() == 1 && p.terms[0].weight == 1.0 && p.terms[0].point == x) p.terms.clear();
    if (de == 0.0) p.terms.clear();
    return p;
}

VREstimate evaluate(const Dataset& d, const SmootherConfig& cfg, double x, Plan p) {
    VREstimate e;
    e.variant = p.variant;
    e.effective_delta = p.effective_delta;
    e.grids = std::move(p.grids);
    if (p.terms.empty()) {
        e.value = local_linear(d, cfg, x);
        return e;
    }
    if (p.variant == Variant::Average) {
        // Each side is summed on its own, then averaged, so the result equals
        // (m~+ + m~-) / 2 exactly.
        double plus = 0.0;
        double minus = 0.0;
        const std::size_t half = p.terms.size() / 2;
        for (std::size_t i = 0; i < p.terms.size(); ++i) {
            const double v = 2.0 * p.terms[i].weight * local_linear(d, cfg, p.terms[i].point);
            (i < half ? plus : minus) += v;
        }
        e.value = 0.5 * (plus + minus);
        return e;
    }
    double sum = 0.0;
    for (const auto& t : p.terms) sum += t.weight * local_linear(d, cfg, t.point);
    e.value = sum;
    return e;
}

}  // namespace

VREstimate m_tilde_q(const Dataset& d, const SmootherConfig& cfg, double x, double r, double delta) {
    return estimate(d, cfg, x, CombinerSpec::q(r, delta));
}

VREstimate m_tilde_pm(const Dataset& d, const SmootherConfig& cfg, double x, double delta, int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("m_tilde_pm: sign must be +1 or -1");
    return estimate(d, cfg, x, sign > 0 ? CombinerSpec::plus(delta) : CombinerSpec::minus(delta));
}

VREstimate m_tilde_a(const Dataset& d, const SmootherConfig& cfg, double x, double delta) {
    return estimate(d, cfg, x, CombinerSpec::average(delta));
}

VREstimate estimate(const Dataset& d, const SmootherConfig& cfg, double x, const CombinerSpec& spec) {
    return evaluate(d, cfg, x, make_plan(x, cfg.h, spec));
}

std::vector<FitPoint> fit_curve(const Dataset& d, const SmootherConfig& cfg, const CombinerSpec& spec,
                                std::span<const double> grid) {
    std::vector<FitPoint> out;
    out.reserve(grid.size());
    for (double x : grid) {
        FitPoint fp;
        fp.x = x;
        try {
            fp.estimate = estimate(d, cfg, x, spec);
        } catch (const std::exception& ex) {
            fp.error = ex.what();
        }
        out.push_back(std::move(fp));
    }
    return out;
}

std::vector<double> estimator_weights(const Dataset& d, const SmootherConfig& cfg, double x,
                                      const CombinerSpec& spec) {
    auto p = make_plan(x, cfg.h, spec);
    if (p.terms.empty()) return local_linear_weights(d, cfg, x);
    std::vector<double> out(d.size(), 0.0);
    for (const auto& t : p.terms) {
        const auto w = local_linear_weights(d, cfg, t.point);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.weight * w[i];
    }
    return out;
}

std::vector<double> unit_grid(std::size_t size) {
    if (size == 0) return {};
    if (size == 1) return {0.5};
    std::vector<double> g(size);
    for (std::size_t i = 0; i < size; ++i) g[i] = static_cast<double>(i) / static_cast<double>(size - 1);
    g.back() = 1.0;
    return g;
}

}  // namespace vrsmooth
