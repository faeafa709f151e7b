#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sosa/trial.hpp"

namespace sosa {

/// A grid of runs: every algorithm on every problem, `trials` times each.
struct ExperimentSpec {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::size_t trials = 30;
    std::size_t budget = 500;
    /// Trial k runs with seed base_seed + k.
    std::uint64_t base_seed = 0;
    /// Seed of randomly generated problem instances (schoen); shared by all trials.
    std::uint64_t instance_seed = 0;
    std::size_t jobs = 1;

    /// Throws ConfigError on unknown names or empty grids.
    void validate() const;
};

/// Runs the whole grid on up to spec.jobs threads. The result is ordered by
/// (algorithm, problem, trial) in the order they are listed, regardless of scheduling.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec);

/// Mean final value of one algorithm on one problem.
struct FinalMean {
    std::string algorithm;
    std::string problem;
    double mean = 0.0;
};

struct SummaryRow {
    std::string algorithm;
    std::string problem;
    std::size_t trials = 0;
    double mean_final = 0.0;
    double std_final = 0.0;
    double q = 0.0;
    /// The problem's best mean was 0, so q is an absolute difference.
    bool q_absolute = false;
};

struct Summary {
    std::vector<SummaryRow> rows;
    /// (algorithm, sum of q over problems) in first-appearance order.
    std::vector<std::pair<std::string, double>> q_totals;

    double q_total(const std::string& algorithm) const;
};

/// Q(A, P) = |m(A, P) - m*(P)| / |m*(P)| with m*(P) the best mean on P, and
/// Q(A) = sum over P. Rows keep input order; trials and std stay zero.
Summary q_metric(const std::vector<FinalMean>& finals);

/// Per-(algorithm, problem) mean and sample std of final values, plus q.
Summary summarize(const std::vector<TrialRecord>& records);

/// Pointwise mean and sample std of the progress curves of a group of runs.
struct CurveBand {
    std::vector<double> mean;
    std::vector<double> stddev;
};
CurveBand curve_band(const std::vector<const TrialRecord*>& runs);

} // namespace sosa
