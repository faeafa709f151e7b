#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sosa/domain.hpp"

namespace sosa {

/// In-loop checks of the conditions the candidate sampler must uphold.
struct RunDiagnostics {
    /// Smallest per-coordinate probability handed to a policy that declares a floor.
    double min_floored_probability = std::numeric_limits<double>::infinity();
    /// Probabilities found below their policy's floor.
    std::size_t probability_violations = 0;
    /// Candidates generated with no perturbed coordinate.
    std::size_t empty_masks = 0;
    std::size_t candidates = 0;
    std::size_t fallback_candidates = 0;
    /// Surrogate fits that needed the ridge fallback.
    std::size_t ridge_fits = 0;
    /// Rank failures answered with one uniform random evaluation.
    std::size_t rank_recoveries = 0;
};

/// Progress of one optimizer run.
struct TrialRecord {
    std::string algorithm;
    std::string problem;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    /// curve[k] = best objective value after k + 1 evaluations.
    std::vector<double> curve;
    /// Best point in raw domain coordinates.
    Point final_best_x;
    double final_best_f = 0.0;
    /// Best value over the initial design alone.
    double design_best_f = 0.0;
    double wall_time_s = 0.0;
    RunDiagnostics diagnostics;
};

} // namespace sosa
