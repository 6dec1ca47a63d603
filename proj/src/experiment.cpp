#include "rainbow/experiment.hpp"

#include "rainbow/parallel.hpp"
#include "rainbow/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rainbow {

WilsonInterval wilson_interval(int successes, int trials, double z)
{
    if (trials < 1 || successes < 0 || successes > trials)
        throw std::invalid_argument("wilson_interval needs 0 <= successes <= trials, trials >= 1");
    const double n = trials;
    const double p = successes / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    WilsonInterval w;
    w.lower = successes == 0 ? 0.0 : std::max(0.0, center - half);
    w.upper = successes == trials ? 1.0 : std::min(1.0, center + half);
    w.standard_error = half / z;
    return w;
}

Graph resolve_graph(const GraphSource &source)
{
    if (const auto *g = std::get_if<Graph>(&source))
        return *g;
    return generate(std::get<FamilySpec>(source));
}

double sharpened_success_bound(const Graph &g, int k)
{
    const long double p2 = k >= 1 ? 1.0L / k : 1.0L;
    const long double p3 = k >= 2 ? static_cast<long double>(3 * k - 2) / (static_cast<long double>(k) * k) : 1.0L;
    long double failure = 0;
    for (Vertex u = 0; u < g.order() && failure < 1; ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v))
                continue;
            const int common = common_neighbor_count(g, u, v);
            int through = 0;
            for (Vertex w : g.neighbors(u))
                through = std::max(through, common_neighbor_count(g, w, v));
            failure += std::min(std::pow(p2, common), std::pow(p3, through));
        }
    return static_cast<double>(std::max(0.0L, 1 - failure));
}

TrialStats run_trials(const ExperimentConfig &cfg)
{
    if (cfg.trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (cfg.k < 1)
        throw std::invalid_argument("palette size must be at least 1");
    const Graph g = resolve_graph(cfg.source);
    if (g.order() < 1 || !is_connected(g))
        throw std::invalid_argument("experiments require a connected graph");

    TrialStats stats;
    stats.k = cfg.k;
    stats.n = g.order();
    stats.m = g.size();
    stats.trials = cfg.trials;
    stats.master_seed = cfg.master_seed;
    stats.theorem = cfg.theorem;
    if (cfg.theorem) {
        const auto check = check_theorem(g, cfg.k, *cfg.theorem);
        stats.theorem_status = check.status;
        if (check.satisfied() && g.order() >= 2) {
            const Rational u = union_bound_failure(g.order());
            stats.theory_lower_bound = 1.0 - static_cast<double>(u.numerator()) / static_cast<double>(u.denominator());
        }
    }

    std::atomic<int> successes{0};
    parallel_for(static_cast<std::size_t>(cfg.trials), cfg.workers, [&](std::size_t trial) {
        const auto coloring = sample_uniform_coloring(g, cfg.k, derive_seed(cfg.master_seed, trial));
        if (is_rainbow_connected(g, coloring, {cfg.limits, 1}).connected)
            successes.fetch_add(1, std::memory_order_relaxed);
    });

    stats.successes = successes.load();
    stats.empirical_rate = static_cast<double>(stats.successes) / stats.trials;
    stats.wilson = wilson_interval(stats.successes, stats.trials);
    stats.sharpened_lower_bound = sharpened_success_bound(g, cfg.k);
    return stats;
}

bool consistent_with_theory(const TrialStats &stats)
{
    if (!stats.theory_lower_bound)
        return true;
    return stats.wilson.lower >= *stats.theory_lower_bound - 3 * stats.wilson.standard_error;
}

std::string_view to_string(SweepParam p)
{
    switch (p) {
    case SweepParam::delta_target:
        return "delta_target";
    case SweepParam::k:
        return "k";
    case SweepParam::n:
        return "n";
    }
    return "?";
}

std::optional<SweepParam> parse_sweep_param(std::string_view text)
{
    for (auto p : {SweepParam::delta_target, SweepParam::k, SweepParam::n})
        if (to_string(p) == text)
            return p;
    return std::nullopt;
}

std::vector<TrialStats> sweep(const ExperimentConfig &base, SweepParam param, std::span<const long long> values)
{
    if (param != SweepParam::k && !std::holds_alternative<FamilySpec>(base.source))
        throw std::invalid_argument("sweeping " + std::string(to_string(param)) + " needs a generated family");

    std::vector<TrialStats> rows;
    rows.reserve(values.size());
    for (long long value : values) {
        ExperimentConfig cfg = base;
        cfg.master_seed = derive_seed(base.master_seed, static_cast<std::uint64_t>(value));
        switch (param) {
        case SweepParam::k:
            cfg.k = static_cast<int>(value);
            break;
        case SweepParam::delta_target:
            std::get<FamilySpec>(cfg.source).delta_target = static_cast<int>(value);
            break;
        case SweepParam::n:
            std::get<FamilySpec>(cfg.source).n = static_cast<int>(value);
            break;
        }
        auto stats = run_trials(cfg);
        stats.parameter = std::string(to_string(param));
        stats.value = value;
        rows.push_back(std::move(stats));
    }
    return rows;
}

std::string trial_stats_csv(std::span<const TrialStats> rows)
{
    std::ostringstream out;
    out.precision(17);
    out << "parameter,value,k,n,m,trials,successes,empirical_rate,wilson_lower,wilson_upper,wilson_se,"
           "theory_lower_bound,sharpened_lower_bound,master_seed,theorem,theorem_status\n";
    for (const auto &r : rows) {
        out << r.parameter.value_or("") << ',';
        if (r.value)
            out << *r.value;
        out << ',' << r.k << ',' << r.n << ',' << r.m << ',' << r.trials << ',' << r.successes << ','
            << r.empirical_rate << ',' << r.wilson.lower << ',' << r.wilson.upper << ',' << r.wilson.standard_error
            << ',';
        if (r.theory_lower_bound)
            out << *r.theory_lower_bound;
        out << ',' << r.sharpened_lower_bound << ',' << r.master_seed << ',';
        if (r.theorem)
            out << to_string(*r.theorem);
        out << ',';
        if (r.theorem_status)
            out << to_string(*r.theorem_status);
        out << '\n';
    }
    return out.str();
}

} // namespace rainbow
