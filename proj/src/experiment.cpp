#include "sosa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "sosa/errors.hpp"
#include "sosa/optimizer.hpp"
#include "sosa/test_functions.hpp"

namespace sosa {
namespace {

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
};

Moments moments(const std::vector<double>& xs)
{
    Moments m;
    if (xs.empty())
        return m;
    double sum = 0.0;
    for (double x : xs)
        sum += x;
    m.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs)
            ss += (x - m.mean) * (x - m.mean);
        m.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return m;
}

} // namespace

void ExperimentSpec::validate() const
{
    if (algorithms.empty())
        throw ConfigError("experiment lists no algorithms");
    if (problems.empty())
        throw ConfigError("experiment lists no problems");
    if (trials == 0)
        throw ConfigError("experiment needs at least one trial");
    if (jobs == 0)
        throw ConfigError("jobs must be >= 1");
    for (const auto& a : algorithms)
        parse_variant(a);
    for (const auto& p : problems) {
        const ProblemId id = parse_problem_id(p);
        if (budget < 2 * (id.dim + 1))
            throw ConfigError("budget " + std::to_string(budget) + " is smaller than the initial design of " + p);
    }
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec)
{
    spec.validate();

    struct Task {
        std::string algorithm;
        std::string problem;
        std::size_t trial;
    };
    std::vector<Task> tasks;
    for (const auto& a : spec.algorithms)
        for (const auto& p : spec.problems)
            for (std::size_t k = 0; k < spec.trials; ++k)
                tasks.push_back(Task{a, p, k});

    std::vector<TrialRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            try {
                const Task& task = tasks[i];
                Objective objective = make_problem(task.problem, spec.instance_seed);
                OptimizerConfig cfg;
                cfg.variant = parse_variant(task.algorithm);
                cfg.n_max = spec.budget;
                cfg.seed = spec.base_seed + task.trial;
                TrialRecord rec = run(objective, cfg);
                rec.problem = task.problem;
                rec.trial = task.trial;
                records[i] = std::move(rec);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(tasks.size());
            }
        }
    };

    const std::size_t threads = std::min(spec.jobs, tasks.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return records;
}

double Summary::q_total(const std::string& algorithm) const
{
    for (const auto& [name, q] : q_totals)
        if (name == algorithm)
            return q;
    throw ConfigError("no q total for algorithm '" + algorithm + "'");
}

Summary q_metric(const std::vector<FinalMean>& finals)
{
    std::map<std::string, double> best;
    for (const auto& f : finals) {
        if (!std::isfinite(f.mean))
            throw NumericError("q_metric: non-finite mean for " + f.algorithm + " on " + f.problem);
        auto [it, inserted] = best.emplace(f.problem, f.mean);
        if (!inserted)
            it->second = std::min(it->second, f.mean);
    }

    Summary out;
    for (const auto& f : finals) {
        SummaryRow row;
        row.algorithm = f.algorithm;
        row.problem = f.problem;
        row.mean_final = f.mean;
        const double ref = best.at(f.problem);
        const double gap = std::abs(f.mean - ref);
        if (ref == 0.0) {
            row.q = gap;
            row.q_absolute = true;
        } else {
            row.q = gap / std::abs(ref);
        }
        out.rows.push_back(row);

        auto it = std::find_if(out.q_totals.begin(), out.q_totals.end(),
                               [&](const auto& e) { return e.first == f.algorithm; });
        if (it == out.q_totals.end())
            out.q_totals.emplace_back(f.algorithm, row.q);
        else
            it->second += row.q;
    }
    return out;
}

Summary summarize(const std::vector<TrialRecord>& records)
{
    // groups in first-appearance order
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, std::vector<double>> finals;
    for (const auto& r : records) {
        auto key = std::make_pair(r.algorithm, r.problem);
        auto [it, inserted] = finals.try_emplace(key);
        if (inserted)
            keys.push_back(key);
        it->second.push_back(r.final_best_f);
    }

    std::vector<FinalMean> means;
    std::vector<Moments> stats;
    for (const auto& key : keys) {
        const Moments m = moments(finals.at(key));
        means.push_back(FinalMean{key.first, key.second, m.mean});
        stats.push_back(m);
    }
    Summary out = q_metric(means);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        out.rows[i].trials = finals.at(keys[i]).size();
        out.rows[i].std_final = stats[i].stddev;
    }
    return out;
}

CurveBand curve_band(const std::vector<const TrialRecord*>& runs)
{
    CurveBand band;
    if (runs.empty())
        return band;
    const std::size_t len = runs.front()->curve.size();
    for (const TrialRecord* r : runs)
        if (r->curve.size() != len)
            throw ConfigError("curve_band: progress curves differ in length");
    band.mean.resize(len);
    band.stddev.resize(len);
    std::vector<double> column(runs.size());
    for (std::size_t k = 0; k < len; ++k) {
        for (std::size_t i = 0; i < runs.size(); ++i)
            column[i] = runs[i]->curve[k];
        const Moments m = moments(column);
        band.mean[k] = m.mean;
        band.stddev[k] = m.stddev;
    }
    return band;
}

} // namespace sosa
