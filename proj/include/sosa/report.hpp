#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sosa/experiment.hpp"
#include "sosa/trial.hpp"

namespace sosa {

inline constexpr const char* kCurvesHeader = "algorithm,problem,trial,eval_index,best_f";
inline constexpr const char* kSummaryHeader = "algorithm,problem,trials,mean_final,std_final,q";
inline constexpr const char* kQTotalsHeader = "algorithm,q_total";
inline constexpr const char* kBandHeader = "eval_index,mean_best_f,std_best_f";

/// Canonical text for a double: 17 significant digits, round-trips exactly.
std::string format_number(double v);

/// Writes curves.csv, summary.csv, qtotals.csv and one
/// curve_<algorithm>_<problem>.csv mean/std band per group into out_dir,
/// creating it if needed. Returns the written paths. Throws IoError.
std::vector<std::filesystem::path> emit_outputs(const std::vector<TrialRecord>& records, const Summary& summary,
                                                const std::filesystem::path& out_dir);

/// Reads curves.csv back into records carrying algorithm, problem, trial,
/// curve and final_best_f.
std::vector<TrialRecord> read_curves_csv(const std::filesystem::path& path);

/// Reads summary.csv back (q_absolute is not persisted).
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);

} // namespace sosa
