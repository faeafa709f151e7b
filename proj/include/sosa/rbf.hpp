#pragma once

#include <vector>

#include "sosa/domain.hpp"

namespace sosa {

/// Cubic radial basis interpolant with a linear polynomial tail,
///
///   s(x) = sum_i lambda_i |x - x_i|^3 + c_0 + sum_k c_k x_k,
///
/// with the side conditions P^T lambda = 0, P = [1 | X]. Immutable once fitted.
class SurrogateModel {
public:
    /// Solves the augmented interpolation system over every given point.
    ///
    /// Falls back to a ridge eps*I on the kernel block (eps = 1e-10, doubled
    /// until the factorization is usable) when the plain system is singular
    /// or too ill-conditioned. Throws SurrogateRankError when fewer than d+1
    /// points are given or [1 | X] is rank deficient, DataError on non-finite
    /// values.
    static SurrogateModel fit(const PointSet& centers, const Eigen::VectorXd& values);
    static SurrogateModel fit(const std::vector<EvaluatedPoint>& points);

    double predict(const Point& x) const;
    /// Row-wise predict; identical to calling predict on each row.
    Eigen::VectorXd predict_batch(const PointSet& xs) const;
    /// predict_batch with the squared distances to the centers supplied, one
    /// column per row of xs. Bit-identical to predict_batch when the
    /// distances come from the same kernel.
    Eigen::VectorXd predict_batch(const PointSet& xs, const Eigen::MatrixXd& squared_distances) const;

    std::size_t dimension() const { return static_cast<std::size_t>(centers_.cols()); }
    std::size_t size() const { return static_cast<std::size_t>(centers_.rows()); }
    const PointSet& centers() const { return centers_; }
    const Eigen::VectorXd& values() const { return values_; }
    const Eigen::VectorXd& rbf_weights() const { return rbf_weights_; }
    /// (c_0, c_1, ..., c_d).
    const Eigen::VectorXd& tail_weights() const { return tail_weights_; }
    /// Zero unless the ridge fallback was needed.
    double ridge_used() const { return ridge_used_; }

private:
    SurrogateModel() = default;

    template <typename Vec>
    double evaluate(const Vec& x, Eigen::VectorXd& scratch) const;
    template <typename Vec>
    double from_squared_distances(const Vec& x, const Eigen::VectorXd& sq) const;

    PointSet centers_;
    Eigen::VectorXd values_;
    Eigen::VectorXd rbf_weights_;
    Eigen::VectorXd tail_weights_;
    double ridge_used_ = 0.0;
};

/// Reciprocal condition estimate below which the plain system counts as singular.
inline constexpr double kMinReciprocalCondition = 1e-15;
inline constexpr double kInitialRidge = 1e-10;

} // namespace sosa
