#include "sosa/rbf.hpp"

#include <cmath>

#include <Eigen/LU>

#include "sosa/detail/distance.hpp"
#include "sosa/doe.hpp"
#include "sosa/errors.hpp"

namespace sosa {
namespace {

constexpr int kMaxRidgeDoublings = 200;

Eigen::MatrixXd cubic_kernel(const PointSet& centers)
{
    const Eigen::Index n = centers.rows();
    Eigen::MatrixXd phi(n, n);
    Eigen::VectorXd sq;
    for (Eigen::Index j = 0; j < n; ++j) {
        detail::squared_distances(centers, centers.row(j), sq);
        phi.col(j) = (sq.array() * sq.array().sqrt()).matrix();
    }
    return phi;
}

} // namespace

SurrogateModel SurrogateModel::fit(const PointSet& centers, const Eigen::VectorXd& values)
{
    const Eigen::Index n = centers.rows();
    const Eigen::Index d = centers.cols();
    if (values.size() != n)
        throw DataError("surrogate fit: point and value counts differ");
    if (!values.allFinite())
        throw DataError("surrogate fit: non-finite objective value");
    if (!centers.allFinite())
        throw DataError("surrogate fit: non-finite center coordinate");
    if (n < d + 1)
        throw SurrogateRankError("surrogate fit needs at least d + 1 points");
    if (affine_rank(centers) < d + 1)
        throw SurrogateRankError("surrogate fit: [1 | X] is rank deficient");

    const Eigen::Index size = n + d + 1;
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(size, size);
    system.topLeftCorner(n, n) = cubic_kernel(centers);
    system.block(0, n, n, 1).setOnes();
    system.block(0, n + 1, n, d) = centers;
    system.bottomLeftCorner(d + 1, n) = system.topRightCorner(n, d + 1).transpose();

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
    rhs.head(n) = values;

    SurrogateModel model;
    model.centers_ = centers;
    model.values_ = values;

    double ridge = 0.0;
    for (int attempt = 0; attempt <= kMaxRidgeDoublings; ++attempt) {
        Eigen::MatrixXd lhs = system;
        if (ridge > 0.0)
            lhs.topLeftCorner(n, n).diagonal().array() += ridge;
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
        if (lu.rcond() >= kMinReciprocalCondition) {
            Eigen::VectorXd sol = lu.solve(rhs);
            if (sol.allFinite()) {
                model.rbf_weights_ = sol.head(n);
                model.tail_weights_ = sol.tail(d + 1);
                model.ridge_used_ = ridge;
                return model;
            }
        }
        ridge = ridge == 0.0 ? kInitialRidge : 2.0 * ridge;
    }
    throw SurrogateRankError("surrogate fit: system stayed singular under ridge regularization");
}

SurrogateModel SurrogateModel::fit(const std::vector<EvaluatedPoint>& points)
{
    Eigen::VectorXd values(static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        values[static_cast<Eigen::Index>(i)] = points[i].f;
    return fit(stack_points(points), values);
}

template <typename Vec>
double SurrogateModel::evaluate(const Vec& x, Eigen::VectorXd& scratch) const
{
    detail::squared_distances(centers_, x, scratch);
    return from_squared_distances(x, scratch);
}

template <typename Vec>
double SurrogateModel::from_squared_distances(const Vec& x, const Eigen::VectorXd& sq) const
{
    const double radial = (sq.array() * sq.array().sqrt()).matrix().dot(rbf_weights_);
    double tail = tail_weights_[0];
    for (Eigen::Index k = 0; k < centers_.cols(); ++k)
        tail += tail_weights_[k + 1] * x[k];
    return radial + tail;
}

double SurrogateModel::predict(const Point& x) const
{
    if (x.size() != centers_.cols())
        throw DomainError("surrogate predict: dimension mismatch");
    Eigen::VectorXd scratch;
    return evaluate(x, scratch);
}

Eigen::VectorXd SurrogateModel::predict_batch(const PointSet& xs) const
{
    if (xs.rows() > 0 && xs.cols() != centers_.cols())
        throw DomainError("surrogate predict_batch: dimension mismatch");
    Eigen::VectorXd out(xs.rows());
    Eigen::VectorXd scratch;
    for (Eigen::Index i = 0; i < xs.rows(); ++i) {
        const Point row = xs.row(i).transpose();
        out[i] = evaluate(row, scratch);
    }
    return out;
}

Eigen::VectorXd SurrogateModel::predict_batch(const PointSet& xs, const Eigen::MatrixXd& squared_distances) const
{
    if (xs.rows() > 0 && xs.cols() != centers_.cols())
        throw DomainError("surrogate predict_batch: dimension mismatch");
    if (squared_distances.rows() != centers_.rows() || squared_distances.cols() != xs.rows())
        throw DomainError("surrogate predict_batch: distance matrix does not match the centers");
    Eigen::VectorXd out(xs.rows());
    Eigen::VectorXd sq;
    for (Eigen::Index i = 0; i < xs.rows(); ++i) {
        // copied so the reduction sees the same alignment as predict
        sq = squared_distances.col(i);
        const Point row = xs.row(i).transpose();
        out[i] = from_squared_distances(row, sq);
    }
    return out;
}

} // namespace sosa
