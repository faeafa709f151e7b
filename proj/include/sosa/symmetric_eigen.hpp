#pragma once

#include <Eigen/Core>

namespace sosa {

struct SymmetricEigen {
    Eigen::VectorXd values;  // unsorted
    Eigen::MatrixXd vectors; // column i pairs with values[i]
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Only the upper
/// triangle is read.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a);

} // namespace sosa
