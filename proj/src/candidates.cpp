#include "sosa/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sosa/detail/distance.hpp"
#include "sosa/errors.hpp"

namespace sosa {

const std::vector<double>& default_sigma_ladder()
{
    static const std::vector<double> ladder = {0.2, 0.1, 0.05, 0.025, 0.0125};
    return ladder;
}

std::size_t default_candidate_count(std::size_t dim) { return std::min<std::size_t>(100 * dim, 5000); }

double default_min_distance(std::size_t dim) { return 1e-6 * std::sqrt(static_cast<double>(dim)); }

void PerturbationPolicy::validate(std::size_t dim) const
{
    if (sigma_ladder.empty())
        throw ConfigError("sigma ladder is empty");
    for (std::size_t i = 0; i < sigma_ladder.size(); ++i) {
        if (!(sigma_ladder[i] > 0.0 && sigma_ladder[i] <= 1.0))
            throw ConfigError("sigma ladder values must lie in (0, 1]");
        if (i > 0 && !(sigma_ladder[i] < sigma_ladder[i - 1]))
            throw ConfigError("sigma ladder must be strictly decreasing");
    }
    if (probabilities.size() == 0)
        return;
    if (static_cast<std::size_t>(probabilities.size()) != dim)
        throw ConfigError("perturbation probabilities have the wrong dimension");
    if ((probabilities.array() < c1).any() || (probabilities.array() > 1.0).any())
        throw ConfigError("perturbation probability outside [c1, 1]");
}

PerturbationPolicy all_coordinates_policy()
{
    PerturbationPolicy p;
    p.kind = PerturbationKind::AllCoordinates;
    p.shared_sigma = true;
    p.c1 = 1.0;
    return p;
}

double dycors_probability(std::size_t n, std::size_t n0, std::size_t n_max, std::size_t dim)
{
    const double p0 = std::min(1.0, 20.0 / static_cast<double>(dim));
    if (n_max <= n0 + 1 || n < n0)
        return p0;
    const double num = std::log(static_cast<double>(n - n0 + 1));
    const double den = std::log(static_cast<double>(n_max - n0));
    return std::clamp(p0 * (1.0 - num / den), 0.0, 1.0);
}

PerturbationPolicy dycors_policy(std::size_t n, std::size_t n0, std::size_t n_max, std::size_t dim)
{
    PerturbationPolicy p;
    p.kind = PerturbationKind::DycorsDecay;
    p.probabilities = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(dim), dycors_probability(n, n0, n_max, dim));
    return p;
}

double dds_probability(std::size_t iteration, std::size_t total)
{
    if (total <= 1 || iteration <= 1)
        return 1.0;
    const double p = 1.0 - std::log(static_cast<double>(iteration)) / std::log(static_cast<double>(total));
    return std::clamp(p, 0.0, 1.0);
}

PerturbationPolicy sensitivity_policy(Eigen::VectorXd probabilities, double c1)
{
    PerturbationPolicy p;
    p.kind = PerturbationKind::Sensitivity;
    p.probabilities = std::move(probabilities);
    p.c1 = c1;
    return p;
}

Mask select_coordinates(const Eigen::VectorXd& probabilities, Rng& rng)
{
    const Eigen::Index d = probabilities.size();
    Mask mask(d);
    for (Eigen::Index i = 0; i < d; ++i)
        mask[i] = uniform01(rng) <= probabilities[i];
    if (d == 0 || mask.any())
        return mask;

    const double top = probabilities.maxCoeff();
    std::vector<Eigen::Index> tied;
    for (Eigen::Index i = 0; i < d; ++i)
        if (probabilities[i] == top)
            tied.push_back(i);
    std::size_t pick = 0;
    if (tied.size() > 1)
        pick = std::uniform_int_distribution<std::size_t>(0, tied.size() - 1)(rng);
    mask[tied[pick]] = true;
    return mask;
}

Point perturb(const Point& best, const Mask& mask, const std::vector<double>& sigma_ladder, Rng& rng)
{
    Point y = best;
    std::uniform_int_distribution<std::size_t> rung(0, sigma_ladder.size() - 1);
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (!mask[i])
            continue;
        const double sigma = sigma_ladder[rung(rng)];
        y[i] += std::normal_distribution<double>(0.0, sigma)(rng);
    }
    return y;
}

Point perturb(const Point& best, const Mask& mask, double sigma, Rng& rng)
{
    Point y = best;
    std::normal_distribution<double> step(0.0, sigma);
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (mask[i])
            y[i] += step(rng);
    return y;
}

double reflect_into_unit(double v)
{
    if (!std::isfinite(v))
        throw NumericError("cannot reflect a non-finite coordinate");
    if (v >= 0.0 && v <= 1.0)
        return v;
    // triangle wave with period 2
    double r = std::fmod(std::abs(v), 2.0);
    if (r > 1.0)
        r = 2.0 - r;
    return std::clamp(r, 0.0, 1.0);
}

Point reflect_into_cube(const Point& y)
{
    Point out(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i)
        out[i] = reflect_into_unit(y[i]);
    return out;
}

CandidateSet generate(const Point& best,
                      const std::vector<std::pair<PerturbationPolicy, std::size_t>>& policies,
                      const PointSet& evaluated, double min_distance, Rng& rng)
{
    const Eigen::Index d = best.size();
    std::size_t total = 0;
    for (const auto& [policy, count] : policies) {
        policy.validate(static_cast<std::size_t>(d));
        total += count;
    }
    if (total == 0)
        throw ConfigError("candidate generation needs at least one candidate");
    if (evaluated.rows() > 0 && evaluated.cols() != d)
        throw DomainError("evaluated points have the wrong dimension");

    CandidateSet out;
    out.points.resize(static_cast<Eigen::Index>(total), d);
    out.masks.resize(static_cast<Eigen::Index>(total), d);
    out.fallback.assign(total, false);
    out.squared_distances.resize(evaluated.rows(), static_cast<Eigen::Index>(total));

    const double min_sq = min_distance * min_distance;
    Eigen::VectorXd sq;
    auto too_close = [&](const Point& y) {
        if (evaluated.rows() == 0)
            return false;
        detail::squared_distances(evaluated, y, sq);
        return min_distance > 0.0 && sq.minCoeff() < min_sq;
    };

    Eigen::Index row = 0;
    for (const auto& [policy, count] : policies) {
        const Eigen::VectorXd probs =
            policy.probabilities.size() == 0 ? Eigen::VectorXd::Ones(d) : policy.probabilities;
        for (std::size_t c = 0; c < count; ++c, ++row) {
            Mask mask;
            Point y;
            bool accepted = false;
            for (int attempt = 0; attempt <= kDuplicateRedraws && !accepted; ++attempt) {
                mask = select_coordinates(probs, rng);
                if (policy.shared_sigma) {
                    const double sigma = policy.sigma_ladder[std::uniform_int_distribution<std::size_t>(
                        0, policy.sigma_ladder.size() - 1)(rng)];
                    y = reflect_into_cube(perturb(best, mask, sigma, rng));
                } else {
                    y = reflect_into_cube(perturb(best, mask, policy.sigma_ladder, rng));
                }
                accepted = !too_close(y);
            }
            if (!accepted) {
                for (Eigen::Index i = 0; i < d; ++i)
                    y[i] = uniform01(rng);
                mask = Mask::Constant(d, true);
                out.fallback[static_cast<std::size_t>(row)] = true;
                if (evaluated.rows() > 0)
                    detail::squared_distances(evaluated, y, sq);
            }
            if (evaluated.rows() > 0)
                out.squared_distances.col(row) = sq;
            out.points.row(row) = y.transpose();
            out.masks.row(row) = mask.transpose();
        }
    }
    return out;
}

} // namespace sosa
