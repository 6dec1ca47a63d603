#include "rainbow/coloring.hpp"

#include "rainbow/parallel.hpp"
#include "rainbow/rng.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rainbow {

EdgeColoring::EdgeColoring(const Graph &g, int k, std::vector<Color> colors)
    : k_(k), n_(g.order()), colors_(std::move(colors))
{
    if (k < 1)
        throw std::invalid_argument("palette size must be at least 1");
    if (static_cast<int>(colors_.size()) != g.size())
        throw std::invalid_argument("coloring has " + std::to_string(colors_.size()) + " entries, graph has " +
                                    std::to_string(g.size()) + " edges");
    for (Color c : colors_)
        if (c < 0 || c >= k)
            throw std::invalid_argument("color " + std::to_string(c) + " outside 0.." + std::to_string(k - 1));
}

EdgeColoring EdgeColoring::from_parts(int n, int k, std::vector<Color> colors)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    EdgeColoring c(Graph{}, k, {});
    for (Color col : colors)
        if (col < 0 || col >= k)
            throw std::invalid_argument("color " + std::to_string(col) + " outside 0.." + std::to_string(k - 1));
    c.n_ = n;
    c.colors_ = std::move(colors);
    return c;
}

EdgeColoring sample_uniform_coloring(const Graph &g, int k, std::uint64_t seed)
{
    if (k < 1)
        throw std::invalid_argument("palette size must be at least 1");
    SplitMix64 rng(seed);
    std::vector<Color> colors(static_cast<std::size_t>(g.size()));
    for (auto &c : colors)
        c = static_cast<Color>(rng.uniform_below(static_cast<std::uint64_t>(k)));
    return EdgeColoring(g, k, std::move(colors));
}

bool is_rainbow_path(const Graph &g, const EdgeColoring &c, std::span<const Vertex> path)
{
    if (!c.matches(g))
        throw std::invalid_argument("coloring does not match graph shape");
    if (path.empty())
        throw std::invalid_argument("empty path");
    std::vector<char> seen_vertex(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> seen_color(static_cast<std::size_t>(c.palette()), 0);
    bool rainbow = true;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.contains(path[i]))
            throw std::invalid_argument("path vertex out of range");
        if (seen_vertex[path[i]]++)
            throw std::invalid_argument("path repeats vertex " + std::to_string(path[i]));
        if (i == 0)
            continue;
        auto e = g.edge_index(path[i - 1], path[i]);
        if (!e)
            throw std::invalid_argument("path step " + std::to_string(path[i - 1]) + "-" + std::to_string(path[i]) +
                                        " is not an edge");
        if (seen_color[c.color(*e)]++)
            rainbow = false;
    }
    return rainbow;
}

Path shortcut_walk(std::span<const Vertex> walk)
{
    Path out;
    for (Vertex x : walk) {
        auto it = std::find(out.begin(), out.end(), x);
        if (it != out.end())
            out.erase(it + 1, out.end());
        else
            out.push_back(x);
    }
    return out;
}

namespace {

using Mask = std::uint32_t;

/// Lexicographic order on equal-size color sets given as sorted lists: the set
/// holding the smallest element of the symmetric difference comes first.
bool subset_less(Mask a, Mask b)
{
    const Mask diff = a ^ b;
    if (diff == 0)
        return false;
    return (a & (diff & (0 - diff))) != 0;
}

/// Breadth-first search over (vertex, used color set) states from one source.
class RainbowSearch {
public:
    RainbowSearch(const Graph &g, const EdgeColoring &c, const SearchLimits &limits) : g_(g)
    {
        if (!c.matches(g))
            throw std::invalid_argument("coloring does not match graph shape");
        // Only colors that occur matter; remap them densely, preserving order.
        std::vector<int> used(static_cast<std::size_t>(c.palette()), -1);
        for (Color col : c.colors())
            used[col] = 0;
        int next = 0;
        for (auto &slot : used)
            if (slot == 0)
                slot = next++;
        if (next > limits.max_colors || next > 31)
            throw std::invalid_argument("coloring uses " + std::to_string(next) +
                                        " distinct colors, above the search limit of " +
                                        std::to_string(std::min(limits.max_colors, 31)));
        bits_ = next;
        edge_bit_.reserve(c.colors().size());
        for (Color col : c.colors())
            edge_bit_.push_back(Mask{1} << used[col]);
        const auto dense = static_cast<std::uint64_t>(g.order()) << bits_;
        if (dense <= (std::uint64_t{1} << 22))
            dense_index_.assign(static_cast<std::size_t>(dense), -1);
    }

    /// Explores from source; stops early once `target` (if set) is found.
    std::vector<std::optional<Path>> run(Vertex source, std::optional<Vertex> target)
    {
        reset();
        const int n = g_.order();
        std::vector<int> found(static_cast<std::size_t>(n), -1);
        int remaining = target ? 1 : n;

        add_state(source, 0, -1);
        found[source] = 0;
        if (!target || *target == source)
            --remaining;

        std::size_t begin = 0;
        while (remaining > 0 && begin < states_.size()) {
            const std::size_t end = states_.size();
            for (std::size_t i = begin; i < end; ++i) {
                const State s = states_[i];
                auto nb = g_.neighbors(s.vertex);
                auto inc = g_.incident_edges(s.vertex);
                for (std::size_t j = 0; j < nb.size(); ++j) {
                    const Mask bit = edge_bit_[inc[j]];
                    if (s.mask & bit)
                        continue;
                    add_state(nb[j], s.mask | bit, static_cast<int>(i));
                }
            }
            std::sort(states_.begin() + static_cast<std::ptrdiff_t>(end), states_.end(),
                      [](const State &a, const State &b) {
                          if (a.mask != b.mask)
                              return subset_less(a.mask, b.mask);
                          return a.vertex < b.vertex;
                      });
            // Parents point into earlier layers, so re-sorting this layer only
            // requires refreshing the index of its own states.
            for (std::size_t i = end; i < states_.size(); ++i) {
                set_index(states_[i].vertex, states_[i].mask, static_cast<int>(i));
                const Vertex v = states_[i].vertex;
                if (found[v] == -1 && (!target || *target == v)) {
                    found[v] = static_cast<int>(i);
                    --remaining;
                }
            }
            begin = end;
        }

        std::vector<std::optional<Path>> out(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            if (found[v] < 0)
                continue;
            Path walk;
            for (int at = found[v]; at >= 0; at = states_[static_cast<std::size_t>(at)].parent)
                walk.push_back(states_[static_cast<std::size_t>(at)].vertex);
            std::reverse(walk.begin(), walk.end());
            out[v] = shortcut_walk(walk);
        }
        return out;
    }

private:
    struct State {
        Vertex vertex;
        Mask mask;
        int parent;
    };

    std::uint64_t key(Vertex v, Mask mask) const
    {
        return (static_cast<std::uint64_t>(mask) * static_cast<std::uint64_t>(g_.order())) +
               static_cast<std::uint64_t>(v);
    }

    void reset()
    {
        if (!dense_index_.empty())
            for (const auto &s : states_)
                dense_index_[key(s.vertex, s.mask)] = -1;
        sparse_index_.clear();
        states_.clear();
    }

    void set_index(Vertex v, Mask mask, int idx)
    {
        if (!dense_index_.empty())
            dense_index_[key(v, mask)] = idx;
        else
            sparse_index_[key(v, mask)] = idx;
    }

    void add_state(Vertex v, Mask mask, int parent)
    {
        const auto k = key(v, mask);
        if (!dense_index_.empty()) {
            if (dense_index_[k] != -1)
                return;
            dense_index_[k] = static_cast<int>(states_.size());
        } else if (!sparse_index_.try_emplace(k, static_cast<int>(states_.size())).second) {
            return;
        }
        states_.push_back({v, mask, parent});
    }

    const Graph &g_;
    int bits_ = 0;
    std::vector<Mask> edge_bit_;
    std::vector<State> states_;
    std::vector<int> dense_index_;
    std::unordered_map<std::uint64_t, int> sparse_index_;
};

void check_vertex(const Graph &g, Vertex v)
{
    if (!g.contains(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

} // namespace

std::optional<Path> rainbow_reachable(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                                      const SearchLimits &limits)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        throw std::invalid_argument("rainbow_reachable requires distinct vertices");
    RainbowSearch search(g, c, limits);
    return std::move(search.run(u, v)[static_cast<std::size_t>(v)]);
}

std::vector<std::optional<Path>> rainbow_paths_from(const Graph &g, const EdgeColoring &c, Vertex source,
                                                    const SearchLimits &limits)
{
    check_vertex(g, source);
    RainbowSearch search(g, c, limits);
    return search.run(source, std::nullopt);
}

VerifyResult is_rainbow_connected(const Graph &g, const EdgeColoring &c, const VerifyOptions &options)
{
    if (!c.matches(g))
        throw std::invalid_argument("coloring does not match graph shape");
    if (g.order() < 1 || !is_connected(g))
        throw std::invalid_argument("rainbow connectivity requires a connected graph");

    const int n = g.order();
    std::vector<std::vector<std::optional<Path>>> per_source(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), options.workers, [&](std::size_t u) {
        RainbowSearch search(g, c, options.limits);
        auto paths = search.run(static_cast<Vertex>(u), std::nullopt);
        // Keep only pairs (u, v) with u < v.
        std::vector<std::optional<Path>> mine(paths.size());
        for (std::size_t v = u + 1; v < paths.size(); ++v)
            mine[v] = std::move(paths[v]);
        per_source[u] = std::move(mine);
    });

    VerifyResult result;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            auto &p = per_source[u][v];
            if (!p) {
                result.connected = false;
                result.failing_pair = VertexPair{u, v};
                result.witness.pairs.clear();
                return result;
            }
            result.witness.pairs.emplace(VertexPair{u, v}, std::move(*p));
        }
    result.connected = true;
    return result;
}

LasVegasResult las_vegas_color(const Graph &g, int k, std::uint64_t seed, const LasVegasOptions &options)
{
    if (k < 1)
        throw std::invalid_argument("palette size must be at least 1");
    if (options.max_iters < 1)
        throw std::invalid_argument("max_iters must be at least 1");
    if (g.order() < 1 || !is_connected(g))
        throw std::invalid_argument("las_vegas_color requires a connected graph");

    const int batch = std::max(1, options.workers);
    std::map<VertexPair, int> failing;
    LasVegasResult result;

    for (int start = 0; start < options.max_iters; start += batch) {
        const int count = std::min(batch, options.max_iters - start);
        std::vector<std::optional<VerifyResult>> outcomes(static_cast<std::size_t>(count));
        std::vector<EdgeColoring> draws(static_cast<std::size_t>(count));
        parallel_for(static_cast<std::size_t>(count), batch, [&](std::size_t i) {
            const auto iter = static_cast<std::uint64_t>(start) + i;
            draws[i] = sample_uniform_coloring(g, k, derive_seed(seed, iter));
            outcomes[i] = is_rainbow_connected(g, draws[i], {options.limits, 1});
        });
        for (int i = 0; i < count; ++i) {
            auto &out = *outcomes[static_cast<std::size_t>(i)];
            if (out.connected) {
                result.coloring = std::move(draws[static_cast<std::size_t>(i)]);
                result.witness = std::move(out.witness);
                result.iterations = start + i + 1;
                result.failing_pairs.assign(failing.begin(), failing.end());
                return result;
            }
            ++result.failures;
            ++failing[*out.failing_pair];
        }
    }
    result.iterations = options.max_iters;
    result.failing_pairs.assign(failing.begin(), failing.end());
    return result;
}

} // namespace rainbow
