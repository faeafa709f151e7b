#include "sosa/domain.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "sosa/errors.hpp"

namespace sosa {

Hypercube::Hypercube(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.size() == 0)
        throw ConfigError("hypercube must have dimension >= 1");
    if (lower_.size() != upper_.size())
        throw ConfigError("hypercube bounds have different lengths");
    for (Eigen::Index i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) {
            std::ostringstream msg;
            msg << "hypercube bound " << i << " is empty: [" << lower_[i] << ", " << upper_[i] << "]";
            throw ConfigError(msg.str());
        }
    }
}

Hypercube Hypercube::uniform(std::size_t dim, double lo, double hi)
{
    const auto n = static_cast<Eigen::Index>(dim);
    return Hypercube(Point::Constant(n, lo), Point::Constant(n, hi));
}

bool Hypercube::contains(const Point& x) const
{
    if (x.size() != lower_.size())
        return false;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i]))
            return false;
    return true;
}

Point Hypercube::normalize(const Point& raw) const
{
    if (!contains(raw))
        throw DomainError("point lies outside the domain");
    Point out = ((raw - lower_).array() / (upper_ - lower_).array()).matrix();
    // rounding can push a boundary value a hair past the cube
    return out.cwiseMax(0.0).cwiseMin(1.0);
}

Point Hypercube::denormalize(const Point& unit) const
{
    if (unit.size() != lower_.size())
        throw DomainError("unit point has the wrong dimension");
    for (Eigen::Index i = 0; i < unit.size(); ++i)
        if (!(unit[i] >= 0.0 && unit[i] <= 1.0))
            throw DomainError("unit point lies outside [0,1]^d");
    Point out = lower_ + (unit.array() * (upper_ - lower_).array()).matrix();
    return out.cwiseMax(lower_).cwiseMin(upper_);
}

Objective::Objective(std::string name, Hypercube domain, Function fn,
                     std::optional<double> known_minimum, std::optional<double> minimum_bound)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      fn_(std::move(fn)),
      known_minimum_(known_minimum),
      minimum_bound_(minimum_bound)
{
    if (!fn_)
        throw ConfigError("objective '" + name_ + "' has no function");
}

double Objective::operator()(const Point& raw)
{
    if (!domain_.contains(raw))
        throw DomainError("objective '" + name_ + "' evaluated outside its domain");
    ++calls_;
    return fn_(raw);
}

double Objective::evaluate_unit(const Point& unit)
{
    return (*this)(domain_.denormalize(unit));
}

PointSet stack_points(const std::vector<EvaluatedPoint>& points)
{
    if (points.empty())
        return PointSet(0, 0);
    PointSet out(static_cast<Eigen::Index>(points.size()), points.front().x.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) = points[i].x.transpose();
    return out;
}

} // namespace sosa
