#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sosa/candidates.hpp"
#include "sosa/domain.hpp"
#include "sosa/merit.hpp"
#include "sosa/random.hpp"
#include "sosa/trial.hpp"

namespace sosa {

enum class Variant { Sosa, Lmsrbf, Dycors, Dds };

std::string_view variant_name(Variant v);
/// Throws ConfigError for anything but sosa, lmsrbf, dycors, dds.
Variant parse_variant(std::string_view name);

/// Settings of one run. Zero-valued sizes pick the defaults for the
/// objective's dimension when the run starts.
struct OptimizerConfig {
    Variant variant = Variant::Sosa;
    std::size_t n_max = 500;
    /// Initial design size; 0 means 2(d + 1).
    std::size_t n0 = 0;
    /// Candidates per iteration; 0 means min(100 d, 5000).
    std::size_t t = 0;
    /// Probability floor for the sensitivity policy; 0 means 1 / d.
    double c1 = 0.0;
    /// Relative gain that counts as a significant improvement.
    double improve_threshold = 1e-3;
    double sensitivity_step = 0.05;
    std::vector<double> sigma_ladder = default_sigma_ladder();
    /// Perturbation size of the surrogate-free search.
    double dds_sigma = 0.2;
    std::uint64_t seed = 0;

    /// The config with every zero default filled in for dimension d.
    /// Throws ConfigError on inconsistent settings.
    OptimizerConfig resolved(std::size_t dim) const;
};

/// Mutable bookkeeping of a run.
struct OptimizerState {
    explicit OptimizerState(std::uint64_t seed) : rng(seed) {}

    std::vector<EvaluatedPoint> history;
    Point best_x;
    double best_f = 0.0;
    std::size_t n = 0;
    std::optional<MeritWeights> current_weights;
    /// Gain of the most recent evaluation over the previous incumbent (0 if none).
    double last_gain = 0.0;
    /// Incumbent value before the most recent evaluation.
    double previous_best_f = 0.0;
    Rng rng;

    /// Appends an evaluation and updates the incumbent on strict improvement.
    void record(Point x, double f);
    /// Whether the last evaluation beat the previous incumbent by more than
    /// threshold * max(1, |previous best|).
    bool last_improved(double threshold) const;
};

/// Keeps the current weights after a significant improvement, otherwise
/// draws w_d uniformly in [0, 1].
MeritWeights next_weights(const OptimizerState& state, double improve_threshold, Rng& rng);

/// Runs the configured variant until exactly n_max evaluations were spent.
TrialRecord run(Objective& objective, const OptimizerConfig& config);

/// Surrogate-free dynamically dimensioned search from the best design point.
TrialRecord run_dds(Objective& objective, const OptimizerConfig& config);

} // namespace sosa
