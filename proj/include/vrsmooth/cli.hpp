#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vrsmooth/simulation.hpp"

namespace vrsmooth::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumeric = 3 };

/// Runs the command-line tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Simulation study description read by `simulate`.
struct StudyConfig {
    SimConfig base;                ///< everything except n
    std::vector<std::size_t> ns;   ///< one study per sample size
};

/// Parses and validates a simulate config. Throws std::invalid_argument whose
/// message lists every offending key.
StudyConfig parse_study_config(const nlohmann::json& j);

nlohmann::json to_json(const SimConfig& cfg);
nlohmann::json to_json(const SimReport& report);

}  // namespace vrsmooth::cli
