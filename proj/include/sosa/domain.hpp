#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sosa {

using Point = Eigen::VectorXd;
/// Row-per-point matrix.
using PointSet = Eigen::MatrixXd;

/// Axis-aligned box [lower, upper] in R^d.
class Hypercube {
public:
    Hypercube(Point lower, Point upper);
    /// The same interval [lo, hi] on every axis.
    static Hypercube uniform(std::size_t dim, double lo, double hi);

    std::size_t dimension() const { return static_cast<std::size_t>(lower_.size()); }
    const Point& lower() const { return lower_; }
    const Point& upper() const { return upper_; }

    bool contains(const Point& x) const;

    /// Maps a point of the box to the unit cube. Throws DomainError outside the box.
    Point normalize(const Point& raw) const;
    /// Inverse of normalize. Throws DomainError outside [0,1]^d.
    Point denormalize(const Point& unit) const;

private:
    Point lower_;
    Point upper_;
};

/// A deterministic objective over a box, counting its evaluations.
///
/// One instance is meant to be owned by a single optimizer run; the
/// counter is not synchronized.
class Objective {
public:
    using Function = std::function<double(const Point&)>;

    Objective(std::string name, Hypercube domain, Function fn,
              std::optional<double> known_minimum = std::nullopt,
              std::optional<double> minimum_bound = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return domain_.dimension(); }
    const Hypercube& domain() const { return domain_; }

    /// Exact global minimum, when it is known.
    std::optional<double> known_minimum() const { return known_minimum_; }
    /// Published upper bound on the minimum when the exact value is unknown.
    std::optional<double> minimum_bound() const { return minimum_bound_; }

    /// Evaluates at a point given in raw domain coordinates.
    double operator()(const Point& raw);
    /// Evaluates at a point given in unit-cube coordinates.
    double evaluate_unit(const Point& unit);

    std::size_t calls() const { return calls_; }
    void reset_calls() { calls_ = 0; }

private:
    std::string name_;
    Hypercube domain_;
    Function fn_;
    std::optional<double> known_minimum_;
    std::optional<double> minimum_bound_;
    std::size_t calls_ = 0;
};

/// One evaluated sample, stored in unit-cube coordinates.
struct EvaluatedPoint {
    Point x;
    double f = 0.0;
};

/// Stacks the x of each evaluated point as rows.
PointSet stack_points(const std::vector<EvaluatedPoint>& points);

} // namespace sosa
