#pragma once

#include <cstddef>

#include "sosa/domain.hpp"
#include "sosa/random.hpp"

namespace sosa {

/// Initial experimental design in the unit cube.
struct Design {
    PointSet points; // m x d
    std::size_t size() const { return static_cast<std::size_t>(points.rows()); }
};

/// Number of random Latin hypercubes compared by the maximin criterion.
inline constexpr int kMaximinDraws = 50;
inline constexpr int kDesignRetries = 100;

/// Design size used throughout: 2(d+1).
inline std::size_t default_design_size(std::size_t dim) { return 2 * (dim + 1); }

/// Maximin Latin hypercube: the best of kMaximinDraws stratified random
/// designs by smallest pairwise distance. Every column places exactly one
/// point in each stratum [k/m, (k+1)/m), uniformly jittered inside it, and
/// [1 | points] is guaranteed full column rank.
///
/// Requires m >= d + 1 (the surrogate itself needs d + 2 points). Throws DesignError if the rank requirement still fails
/// after kDesignRetries rounds.
Design latin_hypercube(std::size_t dim, std::size_t m, Rng& rng);

/// Numerical rank of [1 | points].
Eigen::Index affine_rank(const PointSet& points);

} // namespace sosa
