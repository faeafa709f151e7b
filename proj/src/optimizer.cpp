#include "sosa/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "sosa/doe.hpp"
#include "sosa/errors.hpp"
#include "sosa/rbf.hpp"
#include "sosa/sensitivity.hpp"

namespace sosa {

std::string_view variant_name(Variant v)
{
    switch (v) {
    case Variant::Sosa:
        return "sosa";
    case Variant::Lmsrbf:
        return "lmsrbf";
    case Variant::Dycors:
        return "dycors";
    case Variant::Dds:
        return "dds";
    }
    return "unknown";
}

Variant parse_variant(std::string_view name)
{
    for (Variant v : {Variant::Sosa, Variant::Lmsrbf, Variant::Dycors, Variant::Dds})
        if (variant_name(v) == name)
            return v;
    throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

OptimizerConfig OptimizerConfig::resolved(std::size_t dim) const
{
    if (dim < 1)
        throw ConfigError("objective dimension must be >= 1");
    OptimizerConfig out = *this;
    if (out.n0 == 0)
        out.n0 = default_design_size(dim);
    if (out.t == 0)
        out.t = default_candidate_count(dim);
    if (out.c1 == 0.0)
        out.c1 = 1.0 / static_cast<double>(dim);
    if (out.n0 < dim + 2)
        throw ConfigError("initial design needs at least d + 2 points");
    if (out.n_max < out.n0)
        throw ConfigError("evaluation budget is smaller than the initial design");
    if (!(out.c1 > 0.0 && out.c1 <= 1.0))
        throw ConfigError("c1 must lie in (0, 1]");
    if (!(out.sensitivity_step > 0.0))
        throw ConfigError("sensitivity step must be positive");
    if (!(out.dds_sigma > 0.0))
        throw ConfigError("dds sigma must be positive");
    if (!(out.improve_threshold >= 0.0))
        throw ConfigError("improvement threshold must be nonnegative");
    PerturbationPolicy probe;
    probe.sigma_ladder = out.sigma_ladder;
    probe.validate(dim);
    return out;
}

void OptimizerState::record(Point x, double f)
{
    if (history.empty()) {
        best_x = x;
        best_f = f;
        previous_best_f = f;
        last_gain = 0.0;
    } else {
        previous_best_f = best_f;
        last_gain = 0.0;
        if (f < best_f) {
            last_gain = best_f - f;
            best_x = x;
            best_f = f;
        }
    }
    history.push_back(EvaluatedPoint{std::move(x), f});
    n = history.size();
}

bool OptimizerState::last_improved(double threshold) const
{
    return last_gain > threshold * std::max(1.0, std::abs(previous_best_f));
}

MeritWeights next_weights(const OptimizerState& state, double improve_threshold, Rng& rng)
{
    if (state.current_weights && state.last_improved(improve_threshold))
        return *state.current_weights;
    return MeritWeights::from_distance_weight(uniform01(rng));
}

namespace {

using Clock = std::chrono::steady_clock;

/// Shared bookkeeping of both loops: state, progress curve, evaluated matrix.
class Run {
public:
    Run(Objective& objective, const OptimizerConfig& config)
        : objective_(objective),
          config_(config.resolved(objective.dimension())),
          dim_(objective.dimension()),
          state_(config.seed),
          evaluated_(static_cast<Eigen::Index>(config_.n_max), static_cast<Eigen::Index>(dim_)),
          start_(Clock::now()),
          calls_before_(objective.calls())
    {
        record_.algorithm = std::string(variant_name(config_.variant));
        record_.problem = objective.name();
        record_.seed = config_.seed;
        record_.curve.reserve(config_.n_max);
    }

    const OptimizerConfig& config() const { return config_; }
    OptimizerState& state() { return state_; }
    RunDiagnostics& diagnostics() { return record_.diagnostics; }
    std::size_t dim() const { return dim_; }
    bool budget_left() const { return state_.n < config_.n_max; }

    void initial_design()
    {
        const Design design = latin_hypercube(dim_, config_.n0, state_.rng);
        for (Eigen::Index i = 0; i < design.points.rows(); ++i)
            evaluate(design.points.row(i).transpose());
        record_.design_best_f = state_.best_f;
    }

    void evaluate(const Point& unit)
    {
        const double f = objective_.evaluate_unit(unit);
        evaluated_.row(static_cast<Eigen::Index>(state_.n)) = unit.transpose();
        state_.record(unit, f);
        record_.curve.push_back(state_.best_f);
    }

    void evaluate_uniform()
    {
        Point x(static_cast<Eigen::Index>(dim_));
        for (Eigen::Index i = 0; i < x.size(); ++i)
            x[i] = uniform01(state_.rng);
        evaluate(x);
    }

    PointSet evaluated() const { return evaluated_.topRows(static_cast<Eigen::Index>(state_.n)); }

    TrialRecord finish()
    {
        const std::size_t spent = objective_.calls() - calls_before_;
        if (spent != config_.n_max || record_.curve.size() != config_.n_max)
            throw Error("optimizer spent " + std::to_string(spent) + " evaluations, expected "
                        + std::to_string(config_.n_max));
        record_.final_best_f = state_.best_f;
        record_.final_best_x = objective_.domain().denormalize(state_.best_x);
        record_.wall_time_s = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(record_);
    }

private:
    Objective& objective_;
    OptimizerConfig config_;
    std::size_t dim_;
    OptimizerState state_;
    PointSet evaluated_;
    TrialRecord record_;
    Clock::time_point start_;
    std::size_t calls_before_;
};

void audit(const std::vector<std::pair<PerturbationPolicy, std::size_t>>& policies, const CandidateSet& cands,
           RunDiagnostics& diag)
{
    for (const auto& [policy, count] : policies) {
        if (policy.c1 <= 0.0 || policy.probabilities.size() == 0)
            continue;
        const double lo = policy.probabilities.minCoeff();
        diag.min_floored_probability = std::min(diag.min_floored_probability, lo);
        diag.probability_violations += static_cast<std::size_t>((policy.probabilities.array() < policy.c1).count());
    }
    diag.candidates += cands.size();
    for (Eigen::Index i = 0; i < cands.masks.rows(); ++i)
        if (!cands.masks.row(i).any())
            ++diag.empty_masks;
    diag.fallback_candidates += static_cast<std::size_t>(std::count(cands.fallback.begin(), cands.fallback.end(), true));
}

std::vector<std::pair<PerturbationPolicy, std::size_t>> candidate_policies(const OptimizerConfig& cfg,
                                                                           const SurrogateModel& model,
                                                                           const OptimizerState& state,
                                                                           std::size_t dim)
{
    std::vector<std::pair<PerturbationPolicy, std::size_t>> out;
    switch (cfg.variant) {
    case Variant::Sosa: {
        const SensitivityProfile profile = sensitivity_profile(model, state.best_x, cfg.sensitivity_step, cfg.c1);
        out.emplace_back(sensitivity_policy(profile.p1, cfg.c1), (cfg.t + 1) / 2);
        out.emplace_back(sensitivity_policy(profile.p2, cfg.c1), cfg.t / 2);
        break;
    }
    case Variant::Lmsrbf:
        out.emplace_back(all_coordinates_policy(), cfg.t);
        break;
    case Variant::Dycors:
        out.emplace_back(dycors_policy(state.n, cfg.n0, cfg.n_max, dim), cfg.t);
        break;
    case Variant::Dds:
        throw ConfigError("dds has no candidate policy");
    }
    for (auto& entry : out)
        entry.first.sigma_ladder = cfg.sigma_ladder;
    return out;
}

} // namespace

TrialRecord run(Objective& objective, const OptimizerConfig& config)
{
    if (config.variant == Variant::Dds)
        return run_dds(objective, config);

    Run run(objective, config);
    const OptimizerConfig& cfg = run.config();
    OptimizerState& state = run.state();
    const double min_distance = default_min_distance(run.dim());

    run.initial_design();
    while (run.budget_left()) {
        std::optional<SurrogateModel> model;
        try {
            model = SurrogateModel::fit(state.history);
        } catch (const SurrogateRankError&) {
            ++run.diagnostics().rank_recoveries;
            run.evaluate_uniform();
            continue;
        }
        if (model->ridge_used() > 0.0)
            ++run.diagnostics().ridge_fits;

        const auto policies = candidate_policies(cfg, *model, state, run.dim());
        const PointSet evaluated = run.evaluated();
        const CandidateSet cands = generate(state.best_x, policies, evaluated, min_distance, state.rng);
        audit(policies, cands, run.diagnostics());

        // distances from generation feed both criteria; same values as predict_batch / distance_score
        const Eigen::VectorXd predicted = model->predict_batch(cands.points, cands.squared_distances);
        const MeritWeights weights = next_weights(state, cfg.improve_threshold, state.rng);
        state.current_weights = weights;
        const Selection pick = select_by_merit(predicted, distance_score(cands.squared_distances), weights);
        run.evaluate(cands.points.row(static_cast<Eigen::Index>(pick.index)).transpose());
    }
    return run.finish();
}

TrialRecord run_dds(Objective& objective, const OptimizerConfig& config)
{
    OptimizerConfig dds = config;
    dds.variant = Variant::Dds;
    Run run(objective, dds);
    const OptimizerConfig& cfg = run.config();
    OptimizerState& state = run.state();
    const std::vector<double> ladder = {cfg.dds_sigma};
    const auto d = static_cast<Eigen::Index>(run.dim());

    run.initial_design();
    const std::size_t total = cfg.n_max - cfg.n0;
    for (std::size_t iter = 1; iter <= total; ++iter) {
        const Eigen::VectorXd probs = Eigen::VectorXd::Constant(d, dds_probability(iter, total));
        const Mask mask = select_coordinates(probs, state.rng);
        ++run.diagnostics().candidates;
        if (!mask.any())
            ++run.diagnostics().empty_masks;
        run.evaluate(reflect_into_cube(perturb(state.best_x, mask, ladder, state.rng)));
    }
    return run.finish();
}

} // namespace sosa
