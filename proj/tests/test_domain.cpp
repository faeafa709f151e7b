#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sosa/errors.hpp"
#include "sosa/test_functions.hpp"

using namespace sosa;

namespace {

Point random_point(const Hypercube& box, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Point x(box.lower().size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        x[i] = box.lower()[i] + u(rng) * (box.upper()[i] - box.lower()[i]);
    return x;
}

} // namespace

TEST_CASE("normalize maps corners and midpoints")
{
    const Hypercube box = Hypercube::uniform(3, -15.0, 20.0);
    CHECK(box.normalize(box.lower()).isZero(0.0));
    CHECK(box.normalize(box.upper()).isOnes(0.0));
    CHECK(box.normalize(Point::Constant(3, 2.5)).isApprox(Point::Constant(3, 0.5), 1e-15));
}

TEST_CASE("normalize rejects points outside the box")
{
    const Hypercube box = Hypercube::uniform(2, 0.0, 1.0);
    CHECK_THROWS_AS(box.normalize(Point::Constant(2, 1.5)), DomainError);
    CHECK_THROWS_AS(box.denormalize(Point::Constant(2, -0.1)), DomainError);
    CHECK_THROWS_AS(Hypercube(Point::Constant(2, 1.0), Point::Constant(2, 1.0)), ConfigError);
    CHECK_THROWS_AS(Hypercube(Point(), Point()), ConfigError);
}

TEST_CASE("denormalize inverts normalize on every suite domain")
{
    std::mt19937_64 rng(7);
    for (const auto& name : test_function_names()) {
        const Objective obj = make_test_function(name, 30, 1);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const Point x = random_point(obj.domain(), rng);
            const Point back = obj.domain().denormalize(obj.domain().normalize(x));
            for (Eigen::Index i = 0; i < x.size(); ++i)
                worst = std::max(worst, std::abs(back[i] - x[i]) / std::max(1.0, std::abs(x[i])));
        }
        CHECK_MESSAGE(worst <= 1e-12, name);
    }
}

TEST_CASE("ackley attains -20 - e at the origin and nowhere lower")
{
    Objective ackley = make_test_function("ackley", 30);
    const double target = -20.0 - std::numbers::e;
    CHECK(ackley(Point::Zero(30)) == doctest::Approx(target).epsilon(1e-12));
    CHECK(std::abs(ackley(Point::Zero(30)) - target) <= 1e-10);
    REQUIRE(ackley.known_minimum().has_value());
    CHECK(*ackley.known_minimum() == doctest::Approx(-22.71828182845904));

    std::mt19937_64 rng(11);
    double lowest = 0.0;
    for (int k = 0; k < 100000; ++k)
        lowest = std::min(lowest, ackley(random_point(ackley.domain(), rng)));
    CHECK(lowest >= target);
}

TEST_CASE("rastrigin minimum is -d at the shift point")
{
    Objective f = make_test_function("rastrigin", 30);
    CHECK(f(Point::Constant(30, 4.5)) == doctest::Approx(-30.0).epsilon(1e-14));
    CHECK(*f.known_minimum() == -30.0);
}

TEST_CASE("no suite member beats its configured exact minimum on random samples")
{
    std::mt19937_64 rng(3);
    for (const auto& name : test_function_names()) {
        const std::size_t dim = name == "schoen" ? 35 : 30;
        Objective f = make_test_function(name, dim, 5);
        double lowest = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 100000; ++k)
            lowest = std::min(lowest, f(random_point(f.domain(), rng)));
        CHECK(std::isfinite(lowest));
        if (f.known_minimum())
            CHECK_MESSAGE(lowest >= *f.known_minimum() - 1e-9, name);
        else
            CHECK_MESSAGE(f.minimum_bound().has_value(), name);
        CHECK(f.calls() == 100000);
    }
}

TEST_CASE("levy is nonnegative with its zero at the all-ones point")
{
    Objective f = make_test_function("levy", 30);
    CHECK(std::abs(f(Point::Ones(30))) < 1e-24);
}

TEST_CASE("schoen interpolates its node values")
{
    Objective f = make_test_function("schoen", 35, 9);
    REQUIRE(f.known_minimum());
    CHECK(*f.known_minimum() < 0.0);
    CHECK(*f.known_minimum() >= -100.0);
    Objective g = make_test_function("schoen", 35, 9);
    Objective other = make_test_function("schoen", 35, 10);
    const Point x = Point::Constant(35, 0.3);
    CHECK(f(x) == g(x));
    CHECK(f(x) != other(x));
}

TEST_CASE("evaluation is deterministic and counted")
{
    std::mt19937_64 rng(5);
    for (const auto& name : test_function_names()) {
        Objective f = make_test_function(name, 30, 2);
        const Point x = random_point(f.domain(), rng);
        const double a = f(x);
        const double b = f(x);
        CHECK(a == b);
        CHECK(f.calls() == 2);
        CHECK(f.evaluate_unit(f.domain().normalize(x)) == doctest::Approx(a).epsilon(1e-12));
        CHECK(f.calls() == 3);
    }
}

TEST_CASE("unknown names and identifiers are configuration errors")
{
    CHECK_THROWS_AS(make_test_function("sphere", 3), ConfigError);
    CHECK_THROWS_AS(make_test_function("ackley", 0), ConfigError);
    CHECK_THROWS_AS(parse_problem_id("rosenbrock10"), ConfigError);
    CHECK(parse_problem_id("ackley30").dim == 30);
    CHECK(parse_problem_id("schoen").dim == 35);
    CHECK(parse_problem_id("michalewicz").dim == 30);
    CHECK(parse_problem_id("levy7").name == "levy");
    CHECK(make_problem("keane5").dimension() == 5);
}
