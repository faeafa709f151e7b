#include "sosa/merit.hpp"

#include <cmath>

#include "sosa/detail/distance.hpp"
#include "sosa/errors.hpp"

namespace sosa {
namespace {

// (v - lo) / (hi - lo), or all ones when the range collapses
Eigen::VectorXd unit_range(const Eigen::VectorXd& v)
{
    const double lo = v.minCoeff();
    const double hi = v.maxCoeff();
    if (hi == lo)
        return Eigen::VectorXd::Ones(v.size());
    return ((v.array() - lo) / (hi - lo)).cwiseMax(0.0).cwiseMin(1.0).matrix();
}

} // namespace

MeritWeights MeritWeights::from_distance_weight(double w_d)
{
    if (!(w_d >= 0.0 && w_d <= 1.0))
        throw ConfigError("distance weight must lie in [0, 1]");
    return MeritWeights{1.0 - w_d, w_d};
}

Eigen::VectorXd surrogate_score(const Eigen::VectorXd& values)
{
    if (values.size() == 0)
        throw ConfigError("surrogate_score needs at least one value");
    if (!values.allFinite())
        throw NumericError("surrogate_score: non-finite surrogate value");
    return unit_range(values);
}

namespace {

void fill_distance_scores(DistanceScore& out)
{
    if (out.distances.size() == 0) {
        out.scores.resize(0);
        return;
    }
    // reversed: remote candidates get the low (good) score
    const double lo = out.distances.minCoeff();
    const double hi = out.distances.maxCoeff();
    if (hi == lo)
        out.scores = Eigen::VectorXd::Ones(out.distances.size());
    else
        out.scores = ((hi - out.distances.array()) / (hi - lo)).cwiseMax(0.0).cwiseMin(1.0).matrix();
}

} // namespace

DistanceScore distance_score(const PointSet& candidates, const PointSet& evaluated)
{
    if (evaluated.rows() == 0)
        throw ConfigError("distance_score needs at least one evaluated point");
    if (candidates.rows() > 0 && candidates.cols() != evaluated.cols())
        throw DomainError("distance_score: dimension mismatch");
    DistanceScore out;
    out.distances.resize(candidates.rows());
    Eigen::VectorXd sq;
    for (Eigen::Index i = 0; i < candidates.rows(); ++i) {
        detail::squared_distances(evaluated, candidates.row(i), sq);
        out.distances[i] = std::sqrt(sq.minCoeff());
    }
    fill_distance_scores(out);
    return out;
}

DistanceScore distance_score(const Eigen::MatrixXd& squared_distances)
{
    if (squared_distances.rows() == 0)
        throw ConfigError("distance_score needs at least one evaluated point");
    DistanceScore out;
    out.distances = squared_distances.colwise().minCoeff().transpose().cwiseSqrt();
    fill_distance_scores(out);
    return out;
}

Selection select_by_merit(const Eigen::VectorXd& surrogate_values, const DistanceScore& distance,
                          const MeritWeights& weights)
{
    if (surrogate_values.size() == 0)
        throw ConfigError("select_next needs a non-empty candidate set");
    if (distance.scores.size() != surrogate_values.size())
        throw ConfigError("select_next: one surrogate value per candidate required");
    const Eigen::VectorXd vs = surrogate_score(surrogate_values);

    Selection out;
    out.merit = weights.surrogate * vs + weights.distance * distance.scores;
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < out.merit.size(); ++i)
        if (out.merit[i] < out.merit[best])
            best = i;
    out.index = static_cast<std::size_t>(best);
    return out;
}

Selection select_next(const PointSet& candidates, const Eigen::VectorXd& surrogate_values,
                      const PointSet& evaluated, const MeritWeights& weights)
{
    if (candidates.rows() == 0)
        throw ConfigError("select_next needs a non-empty candidate set");
    if (surrogate_values.size() != candidates.rows())
        throw ConfigError("select_next: one surrogate value per candidate required");
    return select_by_merit(surrogate_values, distance_score(candidates, evaluated), weights);
}

} // namespace sosa
