#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vrsmooth/combine.hpp"
#include "vrsmooth/kernel.hpp"
#include "vrsmooth/scenario.hpp"

namespace vrsmooth {

struct EstimatorEntry {
    std::string name;
    CombinerSpec spec;
    bool ridge = true;
};

struct SimConfig {
    Scenario scenario;
    std::size_t n = 100;
    std::size_t replications = 300;
    std::vector<double> bandwidths;
    Kernel kernel = Kernel::epanechnikov();
    std::vector<EstimatorEntry> estimators;
    /// Name of the estimator efficiencies are measured against; empty for none.
    std::string baseline;
    std::size_t grid_size = 401;
    std::uint64_t seed = 0;
    /// Worker threads; 0 uses the hardware concurrency. Output does not depend on it.
    unsigned threads = 0;
    /// A replication whose curve fails at more than this fraction of grid
    /// points is dropped for that (estimator, h) cell.
    double max_failed_fraction = 0.05;
};

/// {0.008 * 1.1^k, k = 0..count-1}.
std::vector<double> geometric_bandwidths(double start = 0.008, double ratio = 1.1, std::size_t count = 41);

struct SimRow {
    std::string estimator;
    double h = 0.0;
    double mise = 0.0;
    double isb = 0.0;
    double iv = 0.0;
    double mise_se = 0.0;  ///< Monte Carlo standard error of MISE
    std::size_t replications_used = 0;
    std::size_t replications_dropped = 0;
    std::size_t failed_points = 0;
};

struct EstimatorSummary {
    std::string estimator;
    double min_mise = 0.0;
    double argmin_h = 0.0;
    /// min-MISE(baseline) / min-MISE(this); NaN without a baseline.
    double efficiency = 0.0;
};

struct SimReport {
    SimConfig config;
    std::vector<SimRow> rows;  ///< estimator-major, bandwidths ascending
    std::vector<EstimatorSummary> summaries;
    std::vector<std::string> log;

    const SimRow& row(const std::string& estimator, std::size_t h_index) const;
    const EstimatorSummary& summary(const std::string& estimator) const;
};

/// Throws std::invalid_argument listing every problem found.
void validate(const SimConfig& cfg);

SimReport run_study(const SimConfig& cfg);

struct EfficiencyRow {
    Regression regression;
    Design design;
    double noise_k;
    std::size_t n;
    std::string estimator;
    Variant variant;
    double delta;
    double efficiency;
};

/// Baseline-over-estimator min-MISE ratios for every non-baseline estimator of
/// every report. Throws std::invalid_argument when a report has no baseline.
std::vector<EfficiencyRow> efficiency_table(std::span<const SimReport> reports);

}  // namespace vrsmooth
