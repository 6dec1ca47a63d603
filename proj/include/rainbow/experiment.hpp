#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/theorems.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rainbow {

using GraphSource = std::variant<Graph, FamilySpec>;

struct ExperimentConfig {
    GraphSource source;
    int k = 2;
    int trials = 1000;
    std::uint64_t master_seed = 0;
    std::optional<TheoremId> theorem;
    int workers = 1;
    SearchLimits limits{};
};

struct WilsonInterval {
    double lower = 0;
    double upper = 1;
    /// Half-width divided by z.
    double standard_error = 0;

    bool operator==(const WilsonInterval &) const = default;
};

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr std::string_view kSubSeedRule = "splitmix64:derive_seed(master_seed,trial)";

WilsonInterval wilson_interval(int successes, int trials, double z = kZ95);

struct TrialStats {
    int k = 0;
    int n = 0;
    int m = 0;
    int trials = 0;
    int successes = 0;
    double empirical_rate = 0;
    /// 1 - (n-1)/(2n) when the designated theorem's hypotheses hold.
    std::optional<double> theory_lower_bound;
    /// 1 - sum over non-adjacent pairs of the best 2-path / 3-path family bound.
    double sharpened_lower_bound = 0;
    WilsonInterval wilson;
    std::uint64_t master_seed = 0;
    std::string sub_seed_rule{kSubSeedRule};
    std::optional<TheoremId> theorem;
    std::optional<CheckStatus> theorem_status;
    std::optional<std::string> parameter; // set by sweep
    std::optional<long long> value;

    bool operator==(const TrialStats &) const = default;
};

Graph resolve_graph(const GraphSource &source);

/// Counts uniform k-colorings (one per trial, seeded derive_seed(master_seed, i))
/// that the exact verifier accepts.
TrialStats run_trials(const ExperimentConfig &cfg);

/// Per-instance success lower bound from actual common-neighbor counts.
double sharpened_success_bound(const Graph &g, int k);

/// Wilson lower bound no more than 3 standard errors below the theory bound.
/// Vacuously true without a theory bound.
bool consistent_with_theory(const TrialStats &stats);

enum class SweepParam { delta_target, k, n };
std::string_view to_string(SweepParam p);
std::optional<SweepParam> parse_sweep_param(std::string_view text);

/// One run per value with master seed derive_seed(base.master_seed, value).
/// delta_target and n require a FamilySpec source.
std::vector<TrialStats> sweep(const ExperimentConfig &base, SweepParam param, std::span<const long long> values);

/// Column order: parameter,value,k,n,m,trials,successes,empirical_rate,
/// wilson_lower,wilson_upper,wilson_se,theory_lower_bound,sharpened_lower_bound,
/// master_seed,theorem,theorem_status
std::string trial_stats_csv(std::span<const TrialStats> rows);

} // namespace rainbow
