#pragma once

#include <cstddef>

#include "sosa/domain.hpp"

namespace sosa {

/// Convex weights of the surrogate and distance criteria.
struct MeritWeights {
    double surrogate = 0.5;
    double distance = 0.5;

    /// Throws ConfigError unless w_d lies in [0, 1]; w_s = 1 - w_d.
    static MeritWeights from_distance_weight(double w_d);
};

/// (s - s_min) / (s_max - s_min) over the given values; all ones when they
/// are all equal. Throws NumericError on non-finite input.
Eigen::VectorXd surrogate_score(const Eigen::VectorXd& values);

struct DistanceScore {
    Eigen::VectorXd scores;    // (d_max - d) / (d_max - d_min), all ones if equal
    Eigen::VectorXd distances; // min Euclidean distance to the evaluated points
};

/// Distance criterion of each candidate against the evaluated points. The
/// farthest candidate scores 0.
DistanceScore distance_score(const PointSet& candidates, const PointSet& evaluated);

/// Distance score from precomputed squared distances (n x t, one column per candidate).
DistanceScore distance_score(const Eigen::MatrixXd& squared_distances);

struct Selection {
    std::size_t index = 0;
    Eigen::VectorXd merit;
};

/// Minimizes w_s V_S + w_d V_D over the candidates; ties go to the smallest index.
Selection select_next(const PointSet& candidates, const Eigen::VectorXd& surrogate_values,
                      const PointSet& evaluated, const MeritWeights& weights);

/// select_next from already computed surrogate values and raw distances.
Selection select_by_merit(const Eigen::VectorXd& surrogate_values, const DistanceScore& distance,
                          const MeritWeights& weights);

} // namespace sosa
