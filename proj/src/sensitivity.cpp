#include "sosa/sensitivity.hpp"

#include <algorithm>
#include <cmath>

#include "sosa/errors.hpp"
#include "sosa/symmetric_eigen.hpp"

namespace sosa {
namespace {

double clip01(double v) { return std::clamp(v, 0.0, 1.0); }

void check_inputs(const SurrogateModel& model, const Point& center, double delta)
{
    if (!(delta > 0.0))
        throw ConfigError("sensitivity step must be positive");
    if (static_cast<std::size_t>(center.size()) != model.dimension())
        throw DomainError("sensitivity center has the wrong dimension");
}

} // namespace

Eigen::VectorXd si1_index(const SurrogateModel& model, const Point& center, double delta)
{
    check_inputs(model, center, delta);
    const Eigen::Index d = center.size();
    PointSet moves = center.transpose().replicate(2 * d, 1);
    for (Eigen::Index i = 0; i < d; ++i) {
        moves(2 * i, i) = clip01(center[i] + delta);
        moves(2 * i + 1, i) = clip01(center[i] - delta);
    }
    const Eigen::VectorXd s = model.predict_batch(moves);
    Eigen::VectorXd out(d);
    for (Eigen::Index i = 0; i < d; ++i)
        out[i] = std::abs(s[2 * i] - s[2 * i + 1]);
    return out;
}

PerturbationMatrix perturbation_matrix(const SurrogateModel& model, const Point& center, double delta)
{
    check_inputs(model, center, delta);
    const Eigen::Index d = center.size();
    const Eigen::Index pairs = d * (d - 1) / 2;
    const Eigen::Index count = 1 + 2 * d + 4 * pairs;

    // row 0: center; then (i+, i-) per coordinate; then (i+j+, i-j+, i+j-, i-j-) per pair i < j
    PointSet moves = center.transpose().replicate(count, 1);
    Eigen::Index row = 1;
    for (Eigen::Index i = 0; i < d; ++i) {
        moves(row++, i) = clip01(center[i] + delta);
        moves(row++, i) = clip01(center[i] - delta);
    }
    const double signs[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            for (const auto& sg : signs) {
                moves(row, i) = clip01(center[i] + sg[0] * delta);
                moves(row, j) = clip01(center[j] + sg[1] * delta);
                ++row;
            }
        }
    }

    const Eigen::VectorXd s = model.predict_batch(moves);
    const double base = s[0];
    Eigen::MatrixXd l(d, d);
    row = 1;
    for (Eigen::Index i = 0; i < d; ++i) {
        l(i, i) = std::max(std::abs(s[row] - base), std::abs(s[row + 1] - base));
        row += 2;
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            double m = 0.0;
            for (int k = 0; k < 4; ++k)
                m = std::max(m, std::abs(s[row + k] - base));
            l(i, j) = m;
            l(j, i) = m;
            row += 4;
        }
    }
    return PerturbationMatrix{std::move(l)};
}

Eigen::VectorXd si2_index(const PerturbationMatrix& l)
{
    const Eigen::Index d = l.values.rows();
    const Eigen::VectorXd uniform = Eigen::VectorXd::Ones(d);
    if (d == 0 || l.values.cwiseAbs().maxCoeff() == 0.0)
        return uniform;

    const SymmetricEigen eig = jacobi_eigen(l.values);
    const Eigen::VectorXd mag = eig.values.cwiseAbs();
    Eigen::Index lead = 0;
    mag.maxCoeff(&lead);
    double runner_up = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        if (i != lead)
            runner_up = std::max(runner_up, mag[i]);
    if (d > 1 && mag[lead] - runner_up < kEigenTieTolerance * mag[lead])
        return uniform;

    Eigen::VectorXd v = eig.vectors.col(lead).cwiseAbs();
    return v / v.maxCoeff();
}

Eigen::VectorXd probabilities(const Eigen::VectorXd& si, double c1)
{
    if (!(c1 > 0.0 && c1 <= 1.0))
        throw ConfigError("probability floor c1 must lie in (0, 1]");
    if ((si.array() < 0.0).any() || !si.allFinite())
        throw NumericError("sensitivity indices must be finite and nonnegative");
    const Eigen::Index d = si.size();
    if (d == 0)
        return Eigen::VectorXd();
    const double top = si.maxCoeff();
    if (top == 0.0)
        return Eigen::VectorXd::Constant(d, c1);
    Eigen::VectorXd p = (si / top).cwiseMax(c1).cwiseMin(1.0);
    for (Eigen::Index i = 0; i < d; ++i)
        if (si[i] == top)
            p[i] = 1.0;
    return p;
}

SensitivityProfile sensitivity_profile(const SurrogateModel& model, const Point& center, double delta, double c1)
{
    SensitivityProfile out;
    out.center = center;
    out.delta = delta;
    out.si1 = si1_index(model, center, delta);
    out.si2 = si2_index(perturbation_matrix(model, center, delta));
    out.p1 = probabilities(out.si1, c1);
    out.p2 = probabilities(out.si2, c1);
    return out;
}

} // namespace sosa
