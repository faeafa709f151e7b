#pragma once

#include "sosa/domain.hpp"
#include "sosa/rbf.hpp"

namespace sosa {

/// Step used by both indices, in unit-cube coordinates.
inline constexpr double kSensitivityStep = 0.05;
/// Relative gap between the two largest eigenvalue magnitudes below which the
/// leading eigenvector is treated as undefined.
inline constexpr double kEigenTieTolerance = 1e-9;

/// Largest absolute surrogate change over the univariate and bivariate
/// +/-delta moves around a center. Symmetric, nonnegative.
struct PerturbationMatrix {
    Eigen::MatrixXd values;
};

/// Local sensitivity of the surrogate around a center and the coordinate
/// perturbation probabilities derived from it.
struct SensitivityProfile {
    Point center;
    double delta = kSensitivityStep;
    Eigen::VectorXd si1; // central differences
    Eigen::VectorXd si2; // |leading eigenvector| of the perturbation matrix
    Eigen::VectorXd p1;
    Eigen::VectorXd p2;
};

/// si1[i] = |s(c + delta e_i) - s(c - delta e_i)|, moves clipped to the cube.
Eigen::VectorXd si1_index(const SurrogateModel& model, const Point& center, double delta);

/// Builds the perturbation matrix with one batched prediction of
/// 2d + 2d(d-1) + 1 points.
PerturbationMatrix perturbation_matrix(const SurrogateModel& model, const Point& center, double delta);

/// Absolute leading eigenvector (largest |eigenvalue|), scaled to unit max
/// norm. The zero matrix, or a leading eigenvalue tied in magnitude with the
/// runner-up, gives the all-ones vector.
Eigen::VectorXd si2_index(const PerturbationMatrix& l);

/// p[i] = max(c1, si[i] / max(si)); all c1 when si is identically zero.
Eigen::VectorXd probabilities(const Eigen::VectorXd& si, double c1);

/// Both indices and both probability vectors at one center.
SensitivityProfile sensitivity_profile(const SurrogateModel& model, const Point& center, double delta, double c1);

} // namespace sosa
