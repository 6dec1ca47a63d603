#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace rainbow {

struct RcOptions {
    int max_edges = 16;
    std::uint64_t max_nodes = 500'000'000; // 0 = unlimited
    double time_limit_seconds = 0.0;       // 0 = unlimited
    /// Cut a branch when some pair has no path that could still become rainbow
    /// under any completion of the partial coloring. Never cuts a satisfiable branch.
    bool prune_partial = true;
    int workers = 1;
    SearchLimits limits{};
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t colorings_tested = 0;

    SearchStats &operator+=(const SearchStats &o)
    {
        nodes += o.nodes;
        colorings_tested += o.colorings_tested;
        return *this;
    }
    bool operator==(const SearchStats &) const = default;
};

enum class DecisionStatus { certificate, refuted, budget_exceeded };

struct RcDecision {
    DecisionStatus status = DecisionStatus::refuted;
    std::optional<EdgeColoring> certificate;
    RainbowWitness witness;
    SearchStats stats;
};

struct RcResult {
    int rc = 0;
    EdgeColoring certificate;
    RainbowWitness witness;
    int lower_bound_used = 0; // diameter
    SearchStats stats;

    bool operator==(const RcResult &) const = default;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string &what, SearchStats stats) : std::runtime_error(what), stats_(stats) {}
    const SearchStats &stats() const { return stats_; }

private:
    SearchStats stats_;
};

/// Is there a rainbow k-coloring of g? Backtracks over edges in canonical
/// order; an edge may open a new color only if it is the lowest unused one.
/// Statistics and the returned certificate do not depend on options.workers.
RcDecision rc_decision(const Graph &g, int k, const RcOptions &options = {});

/// Smallest k with a rainbow k-coloring, searching upward from diameter(g).
/// Throws BudgetExceeded when a budget in options is hit.
RcResult rc_exact(const Graph &g, const RcOptions &options = {});

/// True if every pair of distinct vertices has a path whose assigned colors
/// (entries >= 0) are distinct and whose length fits in the remaining
/// palette. colors[e] < 0 marks an unassigned edge.
bool all_pairs_completable(const Graph &g, std::span<const Color> colors, int k);

} // namespace rainbow
