#include "sosa/symmetric_eigen.hpp"

#include <cmath>
#include <limits>

#include "sosa/errors.hpp"

namespace sosa {

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& input)
{
    if (input.rows() != input.cols())
        throw NumericError("jacobi_eigen: matrix is not square");
    const Eigen::Index n = input.rows();
    Eigen::MatrixXd a = input.triangularView<Eigen::Upper>();
    a.triangularView<Eigen::StrictlyLower>() = a.transpose().triangularView<Eigen::StrictlyLower>();
    if (!a.allFinite())
        throw NumericError("jacobi_eigen: non-finite entry");
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

    const double scale = a.norm();
    const double eps = std::numeric_limits<double>::epsilon();
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q)
                off += a(p, q) * a(p, q);
        if (std::sqrt(off) <= eps * scale * 0.01 || off == 0.0)
            break;

        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- J^T A J with J the rotation in the (p, q) plane
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    return SymmetricEigen{a.diagonal(), std::move(v)};
}

} // namespace sosa
