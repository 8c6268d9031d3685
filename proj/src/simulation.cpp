#include "vrsmooth/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vrsmooth/vr_estimator.hpp"

namespace vrsmooth {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> trapezoid_weights(std::span<const double> grid) {
    std::vector<double> w(grid.size(), 0.0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double half = 0.5 * (grid[i + 1] - grid[i]);
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

// Replaces NaN entries by linear interpolation between the nearest finite
// neighbours (constant extrapolation at the ends). Returns the NaN count.
std::size_t fill_failures(std::span<double> curve, std::span<const double> grid) {
    std::size_t failed = 0;
    std::size_t last = curve.size();
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (std::isnan(curve[i])) {
            ++failed;
            continue;
        }
        if (last == curve.size()) {
            for (std::size_t j = 0; j < i; ++j) curve[j] = curve[i];
        } else if (i > last + 1) {
            for (std::size_t j = last + 1; j < i; ++j) {
                const double t = (grid[j] - grid[last]) / (grid[i] - grid[last]);
                curve[j] = curve[last] + t * (curve[i] - curve[last]);
            }
        }
        last = i;
    }
    if (last != curve.size())
        for (std::size_t j = last + 1; j < curve.size(); ++j) curve[j] = curve[last];
    return failed;
}

struct Cell {
    std::size_t count = 0;
    std::size_t dropped = 0;
    std::size_t failed_points = 0;
    std::vector<double> mean;
    std::vector<double> m2;
    double ise_mean = 0.0;
    double ise_m2 = 0.0;
};

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<double> geometric_bandwidths(double start, double ratio, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) out[k] = start * std::pow(ratio, static_cast<double>(k));
    return out;
}

const SimRow& SimReport::row(const std::string& estimator, std::size_t h_index) const {
    const std::size_t per = config.bandwidths.size();
    for (std::size_t e = 0; e < config.estimators.size(); ++e)
        if (config.estimators[e].name == estimator) return rows.at(e * per + h_index);
    throw std::out_of_range("no estimator named '" + estimator + "'");
}

const EstimatorSummary& SimReport::summary(const std::string& estimator) const {
    for (const auto& s : summaries)
        if (s.estimator == estimator) return s;
    throw std::out_of_range("no estimator named '" + estimator + "'");
}

void validate(const SimConfig& cfg) {
    std::vector<std::string> problems;
    if (cfg.n < 2) problems.push_back("n must be at least 2");
    if (cfg.replications < 2) problems.push_back("replications must be at least 2");
    if (cfg.bandwidths.empty()) problems.push_back("bandwidth grid is empty");
    for (std::size_t i = 0; i < cfg.bandwidths.size(); ++i) {
        if (!(cfg.bandwidths[i] > 0.0)) problems.push_back("bandwidths must be positive");
        if (i > 0 && !(cfg.bandwidths[i] > cfg.bandwidths[i - 1]))
            problems.push_back("bandwidth grid must be strictly increasing");
    }
    if (cfg.grid_size < 2) problems.push_back("grid_size must be at least 2");
    if (cfg.estimators.empty()) problems.push_back("no estimators");
    std::set<std::string> names;
    for (const auto& e : cfg.estimators) {
        if (e.name.empty()) problems.push_back("estimator with empty name");
        if (!names.insert(e.name).second) problems.push_back("duplicate estimator name '" + e.name + "'");
        if (!(e.spec.delta >= 0.0)) problems.push_back("estimator '" + e.name + "' has negative delta");
        if (e.spec.variant == Variant::Q && !(std::abs(e.spec.r) < 1.0))
            problems.push_back("estimator '" + e.name + "' needs |r| < 1");
    }
    if (!cfg.baseline.empty() && !names.count(cfg.baseline))
        problems.push_back("baseline '" + cfg.baseline + "' is not among the estimators");
    if (!(cfg.scenario.noise_k >= 0.0)) problems.push_back("noise_k must be nonnegative");
    if (!(cfg.max_failed_fraction >= 0.0 && cfg.max_failed_fraction <= 1.0))
        problems.push_back("max_failed_fraction must lie in [0, 1]");
    if (!problems.empty()) {
        std::ostringstream os;
        os << "invalid simulation config:";
        for (const auto& p : problems) os << "\n  - " << p;
        throw std::invalid_argument(os.str());
    }
}

SimReport run_study(const SimConfig& cfg) {
    validate(cfg);
    const auto grid = unit_grid(cfg.grid_size);
    const auto weights = trapezoid_weights(grid);
    const std::size_t G = grid.size();
    const std::size_t H = cfg.bandwidths.size();
    const std::size_t E = cfg.estimators.size();
    const std::size_t curve_block = E * H * G;

    std::vector<double> truth(G);
    for (std::size_t g = 0; g < G; ++g) truth[g] = cfg.scenario.m(grid[g]);

    std::vector<Cell> cells(E * H);
    for (auto& c : cells) {
        c.mean.assign(G, 0.0);
        c.m2.assign(G, 0.0);
    }

    SimReport report;
    report.config = cfg;

    auto simulate = [&](std::size_t rep, std::span<double> out) {
        RngStream stream(cfg.seed, rep);
        const Dataset data = sample(cfg.scenario, cfg.n, stream);
        for (std::size_t e = 0; e < E; ++e) {
            const auto& est = cfg.estimators[e];
            for (std::size_t hi = 0; hi < H; ++hi) {
                const SmootherConfig sc{cfg.kernel, cfg.bandwidths[hi], est.ridge};
                double* curve = out.data() + (e * H + hi) * G;
                for (std::size_t g = 0; g < G; ++g) {
                    try {
                        curve[g] = estimate(data, sc, grid[g], est.spec).value;
                    } catch (const SingularDesign&) {
                        curve[g] = kNaN;
                    }
                }
            }
        }
    };

    const unsigned threads = resolve_threads(cfg.threads);
    const std::size_t batch = std::max<std::size_t>(8, 2 * threads);
    std::vector<double> buffer(batch * curve_block);

    for (std::size_t start = 0; start < cfg.replications; start += batch) {
        const std::size_t count = std::min(batch, cfg.replications - start);
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    simulate(start + i, std::span<double>(buffer.data() + i * curve_block, curve_block));
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, count));
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
        worker();
        pool.clear();
        if (failure) std::rethrow_exception(failure);

        // Ordered reduction keeps results independent of scheduling.
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t rep = start + i;
            for (std::size_t c = 0; c < E * H; ++c) {
                std::span<double> curve(buffer.data() + i * curve_block + c * G, G);
                Cell& cell = cells[c];
                const std::size_t failed = fill_failures(curve, grid);
                cell.failed_points += failed;
                if (static_cast<double>(failed) > cfg.max_failed_fraction * static_cast<double>(G)) {
                    ++cell.dropped;
                    std::ostringstream os;
                    os << "replication " << rep << " dropped for estimator '" << cfg.estimators[c / H].name
                       << "' at h=" << cfg.bandwidths[c % H] << ": " << failed << " of " << G
                       << " grid points failed";
                    report.log.push_back(os.str());
                    continue;
                }
                double ise = 0.0;
                for (std::size_t g = 0; g < G; ++g) {
                    const double err = curve[g] - truth[g];
                    ise += weights[g] * err * err;
                }
                ++cell.count;
                const double k = static_cast<double>(cell.count);
                const double d_ise = ise - cell.ise_mean;
                cell.ise_mean += d_ise / k;
                cell.ise_m2 += d_ise * (ise - cell.ise_mean);
                for (std::size_t g = 0; g < G; ++g) {
                    const double d = curve[g] - cell.mean[g];
                    cell.mean[g] += d / k;
                    cell.m2[g] += d * (curve[g] - cell.mean[g]);
                }
            }
        }
    }

    for (std::size_t e = 0; e < E; ++e) {
        for (std::size_t hi = 0; hi < H; ++hi) {
            const Cell& cell = cells[e * H + hi];
            SimRow row;
            row.estimator = cfg.estimators[e].name;
            row.h = cfg.bandwidths[hi];
            row.replications_used = cell.count;
            row.replications_dropped = cell.dropped;
            row.failed_points = cell.failed_points;
            if (cell.count == 0) {
                row.mise = row.isb = row.iv = row.mise_se = kNaN;
            } else {
                const double k = static_cast<double>(cell.count);
                double isb = 0.0;
                double iv = 0.0;
                for (std::size_t g = 0; g < G; ++g) {
                    const double b = cell.mean[g] - truth[g];
                    isb += weights[g] * b * b;
                    iv += weights[g] * cell.m2[g] / k;
                }
                row.mise = cell.ise_mean;
                row.isb = isb;
                row.iv = iv;
                row.mise_se = cell.count > 1 ? std::sqrt(cell.ise_m2 / (k - 1.0) / k) : kNaN;
            }
            report.rows.push_back(std::move(row));
        }
    }

    for (std::size_t e = 0; e < E; ++e) {
        EstimatorSummary s;
        s.estimator = cfg.estimators[e].name;
        s.min_mise = std::numeric_limits<double>::infinity();
        s.argmin_h = kNaN;
        for (std::size_t hi = 0; hi < H; ++hi) {
            const auto& row = report.rows[e * H + hi];
            if (row.mise < s.min_mise) {
                s.min_mise = row.mise;
                s.argmin_h = row.h;
            }
        }
        report.summaries.push_back(s);
    }
    double base = kNaN;
    for (const auto& s : report.summaries)
        if (s.estimator == cfg.baseline) base = s.min_mise;
    for (auto& s : report.summaries) s.efficiency = base / s.min_mise;
    return report;
}

std::vector<EfficiencyRow> efficiency_table(std::span<const SimReport> reports) {
    std::vector<EfficiencyRow> out;
    for (const auto& rep : reports) {
        const auto& cfg = rep.config;
        if (cfg.baseline.empty()) throw std::invalid_argument("efficiency_table: report has no baseline estimator");
        const double base = rep.summary(cfg.baseline).min_mise;
        for (const auto& e : cfg.estimators) {
            if (e.name == cfg.baseline) continue;
            out.push_back({cfg.scenario.regression, cfg.scenario.design, cfg.scenario.noise_k, cfg.n, e.name,
                           e.spec.variant, e.spec.delta, base / rep.summary(e.name).min_mise});
        }
    }
    return out;
}

}  // namespace vrsmooth
