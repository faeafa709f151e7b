#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sosa/domain.hpp"
#include "sosa/random.hpp"

namespace sosa {

using Mask = Eigen::Array<bool, Eigen::Dynamic, 1>;
using MaskMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

enum class PerturbationKind { AllCoordinates, DycorsDecay, DdsDecay, Sensitivity };

/// Standard deviations (unit-cube units) one of which is drawn per perturbed coordinate.
const std::vector<double>& default_sigma_ladder();

/// Candidates per iteration: min(100 d, 5000).
std::size_t default_candidate_count(std::size_t dim);

/// Duplicate guard radius: 1e-6 sqrt(d).
double default_min_distance(std::size_t dim);

/// How one batch of candidates chooses and moves coordinates.
struct PerturbationPolicy {
    PerturbationKind kind = PerturbationKind::AllCoordinates;
    /// Per-coordinate selection probability; empty means 1 everywhere.
    Eigen::VectorXd probabilities;
    std::vector<double> sigma_ladder = default_sigma_ladder();
    /// Draw one rung per candidate and use it on every perturbed coordinate,
    /// instead of one rung per coordinate.
    bool shared_sigma = false;
    /// Probability floor the policy promises; 0 when it promises none.
    double c1 = 0.0;

    /// Throws ConfigError if the ladder is empty, not strictly decreasing or
    /// outside (0, 1], or a probability is below c1 or above 1.
    void validate(std::size_t dim) const;
};

/// The perturb-everything policy; one sigma per candidate.
PerturbationPolicy all_coordinates_policy();

/// The same probability on every coordinate, decaying with the evaluation count:
/// p0 (1 - log(n - n0 + 1) / log(n_max - n0)), p0 = min(1, 20 / d).
double dycors_probability(std::size_t n, std::size_t n0, std::size_t n_max, std::size_t dim);
PerturbationPolicy dycors_policy(std::size_t n, std::size_t n0, std::size_t n_max, std::size_t dim);

/// DDS selection probability at iteration i of total: 1 - log(i) / log(total).
double dds_probability(std::size_t iteration, std::size_t total);

/// Per-coordinate probabilities from a sensitivity index, floored at c1.
PerturbationPolicy sensitivity_policy(Eigen::VectorXd probabilities, double c1);

/// mask[i] = (u_i <= p[i]) with u_i uniform; an empty mask is replaced by a
/// single coordinate drawn uniformly among those with the largest probability.
Mask select_coordinates(const Eigen::VectorXd& probabilities, Rng& rng);

/// Adds N(0, sigma^2) to each masked coordinate, sigma drawn uniformly from
/// the ladder per coordinate. The result may leave the cube.
Point perturb(const Point& best, const Mask& mask, const std::vector<double>& sigma_ladder, Rng& rng);
/// Adds N(0, sigma^2) to each masked coordinate with one fixed sigma.
Point perturb(const Point& best, const Mask& mask, double sigma, Rng& rng);

/// Folds each coordinate back into [0, 1] by repeated reflection about the
/// violated face. Throws NumericError on non-finite input.
Point reflect_into_cube(const Point& y);
double reflect_into_unit(double v);

struct CandidateSet {
    PointSet points;     // t x d, inside [0,1]^d
    MaskMatrix masks;    // t x d, at least one true per row
    std::vector<bool> fallback; // row replaced by a uniform point after repeated near-duplicates
    /// Column j holds |points.row(j) - evaluated.row(i)|^2 over i, computed
    /// by the same kernel as SurrogateModel::predict and distance_score.
    Eigen::MatrixXd squared_distances; // n x t
    std::size_t size() const { return static_cast<std::size_t>(points.rows()); }
};

/// Draws sum(count) candidates around best: select, perturb, reflect. A
/// candidate closer than min_distance to any evaluated point is redrawn up
/// to 10 times and then replaced by a uniform point of the cube.
CandidateSet generate(const Point& best,
                      const std::vector<std::pair<PerturbationPolicy, std::size_t>>& policies,
                      const PointSet& evaluated, double min_distance, Rng& rng);

inline constexpr int kDuplicateRedraws = 10;

} // namespace sosa
