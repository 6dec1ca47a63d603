#pragma once

// Brute-force references used by the tests. Nothing here calls the
// (vertex, color set) search or the backtracking rc search.

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using rainbow::Edge;
using rainbow::EdgeColoring;
using rainbow::Graph;
using rainbow::Vertex;

/// Length of the shortest rainbow u-v path over all simple paths, if any.
inline std::optional<int> shortest_rainbow_path(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v)
{
    std::optional<int> best;
    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> used;
    std::function<void(Vertex)> walk = [&](Vertex x) {
        if (x == v) {
            const int len = static_cast<int>(used.size());
            if (!best || len < *best)
                best = len;
            return;
        }
        on_path[x] = 1;
        auto nb = g.neighbors(x);
        auto inc = g.incident_edges(x);
        for (std::size_t j = 0; j < nb.size(); ++j) {
            if (on_path[nb[j]])
                continue;
            const int col = c.color(inc[j]);
            if (std::find(used.begin(), used.end(), col) != used.end())
                continue;
            used.push_back(col);
            walk(nb[j]);
            used.pop_back();
        }
        on_path[x] = 0;
    };
    walk(u);
    return best;
}

inline bool rainbow_connected(const Graph &g, const EdgeColoring &c)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!shortest_rainbow_path(g, c, u, v))
                return false;
    return true;
}

/// Tries every one of the k^m colorings.
inline bool exists_rainbow_coloring(const Graph &g, int k)
{
    const int m = g.size();
    std::vector<int> colors(static_cast<std::size_t>(m), 0);
    for (;;) {
        if (rainbow_connected(g, EdgeColoring(g, k, colors)))
            return true;
        int i = 0;
        while (i < m && ++colors[i] == k)
            colors[i++] = 0;
        if (i == m)
            return false;
    }
}

inline int rc(const Graph &g)
{
    for (int k = 1;; ++k)
        if (exists_rainbow_coloring(g, k))
            return k;
}

inline bool connected(const Graph &g)
{
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
    }
    return count == g.order();
}

/// Every labeled graph on n vertices.
inline std::vector<Graph> all_graphs(int n)
{
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i))
                edges.push_back(slots[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

inline Graph random_graph(rainbow::SplitMix64 &rng, int n, double p)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform_real() < p)
                edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph random_connected_graph(rainbow::SplitMix64 &rng, int n, double p)
{
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (connected(g))
            return g;
    }
}

inline EdgeColoring random_coloring(rainbow::SplitMix64 &rng, const Graph &g, int k)
{
    std::vector<int> colors(static_cast<std::size_t>(g.size()));
    for (auto &c : colors)
        c = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(k)));
    return EdgeColoring(g, k, colors);
}

} // namespace oracle
