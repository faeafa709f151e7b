#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sosa/experiment.hpp"

namespace sosa {

/// Experiment settings as read from a config file.
///
///   experiment:
///     trials: 30
///     budget: 500
///     seed: 1
///     instance_seed: 0
///     jobs: 4
///     out: results
///   algorithms: [sosa, lmsrbf, dycors, dds]
///   problems: [ackley30, rastrigin30]
///
/// Every key is optional; missing ones keep the ExperimentSpec defaults.
struct ExperimentConfig {
    ExperimentSpec spec;
    std::optional<std::string> out_dir;
};

/// Throws ConfigError on unreadable files, unknown keys or ill-typed values.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
ExperimentConfig parse_experiment_config(const std::string& text);

/// Splits "a,b, c" into trimmed non-empty items.
std::vector<std::string> split_list(const std::string& text);

} // namespace sosa
