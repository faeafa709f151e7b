#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sosa/candidates.hpp"
#include "sosa/errors.hpp"
#include "sosa/merit.hpp"
#include "sosa/optimizer.hpp"

using namespace sosa;

namespace {

PointSet random_points(Eigen::Index n, Eigen::Index d, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PointSet x(n, d);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        x.data()[i] = u(rng);
    return x;
}

} // namespace

TEST_CASE("surrogate score normalizes to [0, 1]")
{
    CHECK(surrogate_score(Eigen::Vector3d(1, 2, 3)).isApprox(Eigen::Vector3d(0, 0.5, 1)));
    CHECK(surrogate_score(Eigen::Vector3d(5, 5, 5)).isOnes(0.0));
    CHECK(surrogate_score(Eigen::VectorXd::Constant(1, -2.0)).isOnes(0.0));
    CHECK_THROWS_AS(surrogate_score(Eigen::Vector2d(1, NAN)), NumericError);
}

TEST_CASE("distance score rewards remote candidates")
{
    PointSet evaluated(1, 1);
    evaluated << 0.0;
    PointSet cands(2, 1);
    cands << 0.1, 0.3;
    const DistanceScore ds = distance_score(cands, evaluated);
    CHECK(ds.distances[0] == doctest::Approx(0.1));
    CHECK(ds.distances[1] == doctest::Approx(0.3));
    CHECK(ds.scores[0] == 1.0);
    CHECK(ds.scores[1] == 0.0);

    PointSet ring(4, 2);
    ring << 1, 0, 0, 1, -1, 0, 0, -1;
    CHECK(distance_score(ring, PointSet::Zero(1, 2)).scores.isOnes(0.0));

    std::mt19937_64 rng(1);
    const PointSet x = random_points(5, 3, rng);
    CHECK(distance_score(x, x).distances.isZero(0.0));
}

TEST_CASE("precomputed distances give the same scores")
{
    std::mt19937_64 rng(2);
    const PointSet evaluated = random_points(20, 4, rng);
    Rng gen(3);
    const CandidateSet c = generate(evaluated.row(0).transpose(), {{all_coordinates_policy(), 50}}, evaluated, 1e-6, gen);
    const DistanceScore a = distance_score(c.points, evaluated);
    const DistanceScore b = distance_score(c.squared_distances);
    CHECK((a.distances.array() == b.distances.array()).all());
    CHECK((a.scores.array() == b.scores.array()).all());
}

TEST_CASE("dual-optimal candidate is always chosen")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const PointSet evaluated = PointSet::Zero(1, 2);
        PointSet cands = random_points(10, 2, rng) * 0.5;
        const auto star = static_cast<Eigen::Index>(trial % 10);
        cands.row(star) << 0.9, 0.9; // farthest from the origin
        Eigen::VectorXd s = Eigen::VectorXd::Random(10);
        s[star] = -2.0; // lowest prediction
        const MeritWeights w = MeritWeights::from_distance_weight(u(rng));
        const Selection sel = select_next(cands, s, evaluated, w);
        CHECK(sel.index == static_cast<std::size_t>(star));
        CHECK(sel.merit[star] == 0.0);
    }
}

TEST_CASE("pure exploitation and pure exploration limits")
{
    std::mt19937_64 rng(5);
    const PointSet evaluated = random_points(15, 3, rng);
    const PointSet cands = random_points(60, 3, rng);
    const Eigen::VectorXd s = Eigen::VectorXd::Random(60);
    Eigen::Index lowest = 0;
    s.minCoeff(&lowest);
    CHECK(select_next(cands, s, evaluated, MeritWeights{1.0, 0.0}).index == static_cast<std::size_t>(lowest));
    CHECK(select_next(cands, (3.0 * s.array() + 7.0).matrix(), evaluated, MeritWeights{1.0, 0.0}).index
          == static_cast<std::size_t>(lowest));

    Eigen::Index remote = 0;
    distance_score(cands, evaluated).distances.maxCoeff(&remote);
    CHECK(select_next(cands, s, evaluated, MeritWeights{0.0, 1.0}).index == static_cast<std::size_t>(remote));
}

TEST_CASE("ties go to the smallest index")
{
    PointSet cands(3, 1);
    cands << 0.5, 0.5, 0.5;
    const Selection sel = select_next(cands, Eigen::Vector3d(1, 1, 1), PointSet::Zero(1, 1), MeritWeights{0.5, 0.5});
    CHECK(sel.index == 0);
}

TEST_CASE("merit agrees with a brute-force recomputation")
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index d = 1 + trial % 8;
        const PointSet evaluated = random_points(3 + trial % 17, d, rng);
        const PointSet cands = random_points(1 + trial % 50, d, rng);
        Eigen::VectorXd s(cands.rows());
        for (auto& v : s)
            v = u(rng) * 10 - 5;
        const MeritWeights w = MeritWeights::from_distance_weight(u(rng));
        const Selection sel = select_next(cands, s, evaluated, w);

        std::vector<double> dist;
        for (Eigen::Index i = 0; i < cands.rows(); ++i) {
            double best = 1e300;
            for (Eigen::Index j = 0; j < evaluated.rows(); ++j) {
                double acc = 0.0;
                for (Eigen::Index k = 0; k < d; ++k)
                    acc += (cands(i, k) - evaluated(j, k)) * (cands(i, k) - evaluated(j, k));
                best = std::min(best, std::sqrt(acc));
            }
            dist.push_back(best);
        }
        const double smin = s.minCoeff(), smax = s.maxCoeff();
        const double dmin = *std::min_element(dist.begin(), dist.end());
        const double dmax = *std::max_element(dist.begin(), dist.end());
        std::size_t arg = 0;
        double lowest = 1e300;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            const double vs = smax > smin ? (s[static_cast<Eigen::Index>(i)] - smin) / (smax - smin) : 1.0;
            const double vd = dmax > dmin ? (dmax - dist[i]) / (dmax - dmin) : 1.0;
            const double merit = w.surrogate * vs + w.distance * vd;
            CHECK(std::abs(merit - sel.merit[static_cast<Eigen::Index>(i)]) <= 1e-12);
            if (merit < lowest - 1e-12) {
                lowest = merit;
                arg = i;
            }
        }
        CHECK(sel.index == arg);
        CHECK((sel.merit.array() >= 0.0).all());
        CHECK((sel.merit.array() <= 1.0).all());
    }
}

TEST_CASE("increasing affine maps of the surrogate leave the choice unchanged")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const PointSet evaluated = random_points(10, 3, rng);
        const PointSet cands = random_points(40, 3, rng);
        Eigen::VectorXd s(40);
        for (auto& v : s)
            v = u(rng);
        const MeritWeights w = MeritWeights::from_distance_weight(u(rng));
        const double scale = std::ldexp(1.0, static_cast<int>(trial % 9) - 4);
        const Eigen::VectorXd mapped = (scale * s.array() + 0.5 * static_cast<double>(trial)).matrix();
        CHECK(select_next(cands, s, evaluated, w).index == select_next(cands, mapped, evaluated, w).index);
    }
}

TEST_CASE("weights are kept after a significant improvement")
{
    OptimizerState state(1);
    state.record(Point::Zero(2), 10.0);
    state.current_weights = MeritWeights{0.3, 0.7};
    state.record(Point::Ones(2), 5.0);
    CHECK(state.last_improved(1e-3));
    Rng rng(2);
    const MeritWeights kept = next_weights(state, 1e-3, rng);
    CHECK(kept.surrogate == 0.3);
    CHECK(kept.distance == 0.7);

    state.record(Point::Constant(2, 0.5), 4.99999);
    CHECK_FALSE(state.last_improved(1e-3));
    const MeritWeights fresh = next_weights(state, 1e-3, rng);
    CHECK(fresh.surrogate + fresh.distance == 1.0);
}

TEST_CASE("redrawn distance weights are uniform on [0, 1]")
{
    OptimizerState state(3);
    state.record(Point::Zero(1), 1.0);
    Rng rng(4);
    const int draws = 100000;
    std::vector<double> w;
    w.reserve(draws);
    for (int k = 0; k < draws; ++k) {
        const MeritWeights m = next_weights(state, 1e-3, rng);
        CHECK(m.surrogate + m.distance == 1.0);
        w.push_back(m.distance);
    }
    std::sort(w.begin(), w.end());
    double ks = 0.0;
    for (int k = 0; k < draws; ++k) {
        const double v = w[static_cast<std::size_t>(k)];
        ks = std::max({ks, std::abs((k + 1.0) / draws - v), std::abs(static_cast<double>(k) / draws - v)});
    }
    // Kolmogorov-Smirnov critical value at the 1% level
    CHECK(ks < 1.628 / std::sqrt(static_cast<double>(draws)));
}
