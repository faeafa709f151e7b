#pragma once

#include <Eigen/Core>

namespace sosa::detail {

/// out[j] = |x - points.row(j)|^2.
///
/// Walks the contiguous columns four coordinates at a time. The summation
/// order per entry depends only on the dimension, never on how many queries
/// are batched, so every caller gets bit-identical distances.
template <typename Vec>
void squared_distances(const Eigen::MatrixXd& points, const Vec& x, Eigen::VectorXd& out)
{
    const Eigen::Index n = points.rows();
    const Eigen::Index d = points.cols();
    out.setZero(n);
    double* acc = out.data();
    Eigen::Index k = 0;
    for (; k + 4 <= d; k += 4) {
        const double* c0 = points.col(k).data();
        const double* c1 = points.col(k + 1).data();
        const double* c2 = points.col(k + 2).data();
        const double* c3 = points.col(k + 3).data();
        const double x0 = x[k], x1 = x[k + 1], x2 = x[k + 2], x3 = x[k + 3];
        for (Eigen::Index j = 0; j < n; ++j) {
            const double a = c0[j] - x0;
            const double b = c1[j] - x1;
            const double c = c2[j] - x2;
            const double e = c3[j] - x3;
            acc[j] += (a * a + b * b) + (c * c + e * e);
        }
    }
    for (; k < d; ++k) {
        const double* c0 = points.col(k).data();
        const double x0 = x[k];
        for (Eigen::Index j = 0; j < n; ++j) {
            const double a = c0[j] - x0;
            acc[j] += a * a;
        }
    }
}

} // namespace sosa::detail
