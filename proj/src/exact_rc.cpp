#include "rainbow/exact_rc.hpp"

#include "rainbow/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <deque>
#include <limits>
#include <mutex>

namespace rainbow {

namespace {

using Mask = std::uint32_t;

/// 0-1 BFS over (vertex, assigned colors used); cost counts unassigned edges.
class CompletionCheck {
public:
    CompletionCheck(const Graph &g, int k) : g_(g), k_(k)
    {
        cost_.assign(static_cast<std::size_t>(g.order()) << k, kUnseen);
    }

    bool operator()(std::span<const Color> colors)
    {
        const int n = g_.order();
        std::vector<char> reached(static_cast<std::size_t>(n));
        for (Vertex u = 0; u + 1 < n; ++u) {
            std::fill(reached.begin(), reached.end(), 0);
            int missing = n - 1 - u;
            for (std::size_t idx : touched_)
                cost_[idx] = kUnseen;
            touched_.clear();
            std::deque<std::pair<Vertex, Mask>> queue;
            relax(u, 0, 0, queue, true);
            while (!queue.empty() && missing > 0) {
                auto [x, mask] = queue.front();
                queue.pop_front();
                const int w = cost_[index(x, mask)];
                const int length = std::popcount(mask) + w;
                if (x > u && !reached[x]) {
                    reached[x] = 1;
                    --missing;
                }
                if (length >= k_)
                    continue;
                auto nb = g_.neighbors(x);
                auto inc = g_.incident_edges(x);
                for (std::size_t j = 0; j < nb.size(); ++j) {
                    const Color c = colors[inc[j]];
                    if (c < 0) {
                        relax(nb[j], mask, w + 1, queue, false);
                    } else {
                        const Mask bit = Mask{1} << c;
                        if (!(mask & bit))
                            relax(nb[j], mask | bit, w, queue, true);
                    }
                }
            }
            if (missing > 0)
                return false;
        }
        return true;
    }

private:
    static constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();

    std::size_t index(Vertex v, Mask mask) const
    {
        return (static_cast<std::size_t>(mask) * static_cast<std::size_t>(g_.order())) + static_cast<std::size_t>(v);
    }

    void relax(Vertex v, Mask mask, int w, std::deque<std::pair<Vertex, Mask>> &queue, bool front)
    {
        const auto idx = index(v, mask);
        if (cost_[idx] != kUnseen && cost_[idx] <= w)
            return;
        if (cost_[idx] == kUnseen)
            touched_.push_back(idx);
        cost_[idx] = static_cast<std::uint8_t>(w);
        if (front)
            queue.emplace_front(v, mask);
        else
            queue.emplace_back(v, mask);
    }

    const Graph &g_;
    int k_;
    std::vector<std::uint8_t> cost_;
    std::vector<std::size_t> touched_;
};

struct Task {
    std::vector<Color> prefix;
    int used = 0;
    std::uint64_t prefix_nodes = 0; // enumeration nodes preceding this task in DFS order
};

struct Budget {
    std::uint64_t max_nodes;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exceeded{false};

    bool charge()
    {
        const auto total = nodes.fetch_add(1) + 1;
        if (max_nodes != 0 && total > max_nodes)
            exceeded = true;
        if (has_deadline && (total & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            exceeded = true;
        return !exceeded;
    }
};

class Backtracker {
public:
    Backtracker(const Graph &g, int k, const RcOptions &options, Budget &budget)
        : g_(g), k_(k), options_(options), budget_(budget), check_(g, k),
          colors_(static_cast<std::size_t>(g.size()), -1)
    {
    }

    /// Enumerates symmetry-reduced prefixes of length depth in DFS order.
    void enumerate(int depth, std::vector<Task> &tasks, std::uint64_t &prefix_nodes)
    {
        enumerate_from(0, 0, depth, tasks, prefix_nodes);
    }

    /// Searches below a prefix; sets certificate on success.
    bool solve(const Task &task, const std::atomic<std::size_t> &winner, std::size_t index)
    {
        std::fill(colors_.begin(), colors_.end(), -1);
        std::copy(task.prefix.begin(), task.prefix.end(), colors_.begin());
        winner_ = &winner;
        index_ = index;
        return dfs(static_cast<int>(task.prefix.size()), task.used);
    }

    SearchStats stats;
    std::optional<VerifyResult> verified;
    std::vector<Color> certificate;

private:
    bool admissible()
    {
        return !options_.prune_partial || check_(colors_);
    }

    void enumerate_from(int depth, int used, int target, std::vector<Task> &tasks, std::uint64_t &prefix_nodes)
    {
        if (depth == target) {
            tasks.push_back({std::vector<Color>(colors_.begin(), colors_.begin() + depth), used, prefix_nodes});
            return;
        }
        ++prefix_nodes;
        if (!admissible())
            return;
        for (Color c = 0; c <= std::min(used, k_ - 1); ++c) {
            colors_[depth] = c;
            enumerate_from(depth + 1, std::max(used, c + 1), target, tasks, prefix_nodes);
            colors_[depth] = -1;
        }
    }

    bool dfs(int depth, int used)
    {
        if (budget_.exceeded || winner_->load(std::memory_order_relaxed) < index_)
            return false;
        ++stats.nodes;
        if (!budget_.charge())
            return false;
        if (depth == g_.size()) {
            ++stats.colorings_tested;
            if (options_.prune_partial && !check_(colors_))
                return false;
            EdgeColoring candidate(g_, k_, colors_);
            auto result = is_rainbow_connected(g_, candidate, {options_.limits, 1});
            if (!result.connected)
                return false;
            verified = std::move(result);
            certificate = colors_;
            return true;
        }
        if (!admissible())
            return false;
        for (Color c = 0; c <= std::min(used, k_ - 1); ++c) {
            colors_[depth] = c;
            if (dfs(depth + 1, std::max(used, c + 1)))
                return true;
        }
        colors_[depth] = -1;
        return false;
    }

    const Graph &g_;
    int k_;
    const RcOptions &options_;
    Budget &budget_;
    CompletionCheck check_;
    std::vector<Color> colors_;
    const std::atomic<std::size_t> *winner_ = nullptr;
    std::size_t index_ = 0;
};

/// Number of prefix tasks generated regardless of worker count, so that the
/// reported statistics are reproducible.
constexpr std::size_t kTargetTasks = 64;

} // namespace

bool all_pairs_completable(const Graph &g, std::span<const Color> colors, int k)
{
    if (static_cast<int>(colors.size()) != g.size())
        throw std::invalid_argument("partial coloring length mismatch");
    if (k < 1 || k > 24)
        throw std::invalid_argument("palette size outside 1..24");
    return CompletionCheck(g, k)(colors);
}

RcDecision rc_decision(const Graph &g, int k, const RcOptions &options)
{
    if (g.order() < 1 || !is_connected(g))
        throw std::invalid_argument("rc_decision requires a connected graph");
    if (k < 1)
        throw std::invalid_argument("palette size must be at least 1");
    if (k > g.size())
        throw std::invalid_argument("palette size exceeds edge count");
    if (k > 24)
        throw std::invalid_argument("palette size above exact-search limit of 24");

    Budget budget{options.max_nodes, {}, options.time_limit_seconds > 0, {}, {}};
    if (budget.has_deadline)
        budget.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(options.time_limit_seconds));

    // Deepen the prefix until there are enough tasks or the tree is exhausted.
    std::vector<Task> tasks;
    std::uint64_t prefix_nodes = 0;
    for (int depth = 0;; ++depth) {
        tasks.clear();
        prefix_nodes = 0;
        Backtracker(g, k, options, budget).enumerate(depth, tasks, prefix_nodes);
        if (tasks.size() >= kTargetTasks || depth == g.size() || tasks.empty())
            break;
    }
    // The prefix nodes count against the budget just as in a sequential search.
    budget.nodes = prefix_nodes;
    if (options.max_nodes != 0 && prefix_nodes > options.max_nodes)
        budget.exceeded = true;

    RcDecision decision;
    if (tasks.empty() || budget.exceeded) {
        decision.stats.nodes = prefix_nodes;
        decision.status = budget.exceeded ? DecisionStatus::budget_exceeded : DecisionStatus::refuted;
        return decision;
    }

    std::vector<SearchStats> task_stats(tasks.size());
    std::atomic<std::size_t> winner{tasks.size()};
    std::mutex winner_mutex;
    std::optional<VerifyResult> best_verified;
    std::vector<Color> best_colors;

    parallel_for(tasks.size(), options.workers, [&](std::size_t t) {
        // Tasks after a known winner stop early; tasks before it must finish.
        if (t > winner.load())
            return;
        Backtracker bt(g, k, options, budget);
        const bool ok = bt.solve(tasks[t], winner, t);
        task_stats[t] = bt.stats;
        if (ok) {
            std::lock_guard lock(winner_mutex);
            if (t < winner.load()) {
                winner = t;
                best_verified = std::move(bt.verified);
                best_colors = std::move(bt.certificate);
            }
        }
    });

    const std::size_t win = winner.load();
    const bool found = win < tasks.size();
    const std::size_t last = found ? win : tasks.size() - 1;
    decision.stats.nodes = found ? tasks[win].prefix_nodes : prefix_nodes;
    for (std::size_t t = 0; t <= last; ++t)
        decision.stats += task_stats[t];

    if (found) {
        decision.status = DecisionStatus::certificate;
        decision.certificate = EdgeColoring(g, k, best_colors);
        decision.witness = std::move(best_verified->witness);
    } else if (budget.exceeded) {
        decision.status = DecisionStatus::budget_exceeded;
    } else {
        decision.status = DecisionStatus::refuted;
    }
    return decision;
}

RcResult rc_exact(const Graph &g, const RcOptions &options)
{
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("rc is defined here for connected graphs with at least two vertices");
    if (g.size() > options.max_edges)
        throw BudgetExceeded("graph has " + std::to_string(g.size()) + " edges, above the search budget of " +
                                 std::to_string(options.max_edges),
                             {});

    RcResult result;
    result.lower_bound_used = diameter(g).value();
    for (int k = result.lower_bound_used; k <= g.size(); ++k) {
        auto decision = rc_decision(g, k, options);
        result.stats += decision.stats;
        switch (decision.status) {
        case DecisionStatus::certificate:
            result.rc = k;
            result.certificate = std::move(*decision.certificate);
            result.witness = std::move(decision.witness);
            return result;
        case DecisionStatus::budget_exceeded:
            throw BudgetExceeded("search budget exceeded at k = " + std::to_string(k), result.stats);
        case DecisionStatus::refuted:
            break;
        }
    }
    // A spanning tree colored injectively is rainbow connected, so k = m always succeeds.
    throw std::logic_error("rc search exhausted all palette sizes");
}

} // namespace rainbow
