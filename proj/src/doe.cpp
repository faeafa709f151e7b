#include "sosa/doe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/QR>

#include "sosa/errors.hpp"

namespace sosa {
namespace {

PointSet random_lhs(Eigen::Index m, Eigen::Index d, Rng& rng)
{
    PointSet x(m, d);
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(m));
    const double width = 1.0 / static_cast<double>(m);
    for (Eigen::Index j = 0; j < d; ++j) {
        std::iota(perm.begin(), perm.end(), Eigen::Index{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (Eigen::Index i = 0; i < m; ++i) {
            const auto stratum = perm[static_cast<std::size_t>(i)];
            double v = (static_cast<double>(stratum) + uniform01(rng)) * width;
            // keep floor(v * m) == stratum despite rounding at the upper edge
            while (std::floor(v * static_cast<double>(m)) > static_cast<double>(stratum))
                v = std::nextafter(v, 0.0);
            x(i, j) = v;
        }
    }
    return x;
}

double min_pairwise_distance(const PointSet& x)
{
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index k = i + 1; k < x.rows(); ++k)
            best = std::min(best, (x.row(i) - x.row(k)).squaredNorm());
    return std::sqrt(best);
}

} // namespace

Eigen::Index affine_rank(const PointSet& points)
{
    Eigen::MatrixXd aug(points.rows(), points.cols() + 1);
    aug.col(0).setOnes();
    aug.rightCols(points.cols()) = points;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(aug);
    return qr.rank();
}

Design latin_hypercube(std::size_t dim, std::size_t m, Rng& rng)
{
    if (dim < 1)
        throw ConfigError("design dimension must be >= 1");
    if (m < dim + 1)
        throw ConfigError("design size must be at least d + 1");
    const auto rows = static_cast<Eigen::Index>(m);
    const auto cols = static_cast<Eigen::Index>(dim);

    for (int attempt = 0; attempt < kDesignRetries; ++attempt) {
        PointSet best;
        double best_spread = -1.0;
        for (int draw = 0; draw < kMaximinDraws; ++draw) {
            PointSet x = random_lhs(rows, cols, rng);
            const double spread = min_pairwise_distance(x);
            if (spread > best_spread) {
                best_spread = spread;
                best = std::move(x);
            }
        }
        if (affine_rank(best) == cols + 1)
            return Design{std::move(best)};
    }
    throw DesignError("could not draw a Latin hypercube with full affine rank");
}

} // namespace sosa
