#include "rainbow/graph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>

namespace rainbow {

Graph::Graph(int n, std::span<const Edge> edge_list) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");

    edges_.reserve(edge_list.size());
    for (const auto &[a, b] : edge_list) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("vertex id out of range in edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        if (a == b)
            throw std::invalid_argument("loop at vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(static_cast<std::size_t>(n), {});
    inc_.assign(static_cast<std::size_t>(n), {});
    // Canonical order already yields sorted neighbor lists for the lower
    // endpoint; the upper endpoint lists are sorted below.
    for (EdgeId e = 0; e < size(); ++e) {
        const auto [a, b] = edges_[static_cast<std::size_t>(e)];
        adj_[a].push_back(b);
        inc_[a].push_back(e);
        adj_[b].push_back(a);
        inc_[b].push_back(e);
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        std::vector<std::pair<Vertex, EdgeId>> zipped;
        zipped.reserve(adj_[v].size());
        for (std::size_t i = 0; i < adj_[v].size(); ++i)
            zipped.emplace_back(adj_[v][i], inc_[v][i]);
        std::sort(zipped.begin(), zipped.end());
        for (std::size_t i = 0; i < zipped.size(); ++i) {
            adj_[v][i] = zipped[i].first;
            inc_[v][i] = zipped[i].second;
        }
    }
}

std::optional<EdgeId> Graph::edge_index(Vertex u, Vertex v) const
{
    if (!contains(u) || !contains(v) || u == v)
        return std::nullopt;
    if (degree(u) > degree(v))
        std::swap(u, v);
    const auto &nb = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        return std::nullopt;
    return inc_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
}

Graph build_graph(int n, std::span<const Edge> edge_list) { return Graph(n, edge_list); }

int min_degree(const Graph &g)
{
    if (g.order() < 1)
        throw std::invalid_argument("min_degree of empty graph");
    int best = INT_MAX;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

int sigma2(const Graph &g)
{
    int best = INT_MAX;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto nb = g.neighbors(u);
        auto it = nb.begin();
        for (Vertex v = u + 1; v < g.order(); ++v) {
            while (it != nb.end() && *it < v)
                ++it;
            if (it != nb.end() && *it == v)
                continue;
            best = std::min(best, g.degree(u) + g.degree(v));
        }
    }
    if (best == INT_MAX)
        throw std::domain_error("sigma2 undefined: no non-adjacent pair");
    return best;
}

std::vector<Distance> distances_from(const Graph &g, Vertex source)
{
    if (!g.contains(source))
        throw std::invalid_argument("vertex out of range");
    std::vector<Distance> dist(static_cast<std::size_t>(g.order()), Distance::infinite());
    std::deque<Vertex> queue{source};
    dist[source] = Distance(0);
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        int next = dist[x].value() + 1;
        for (Vertex y : g.neighbors(x))
            if (!dist[y].is_finite()) {
                dist[y] = Distance(next);
                queue.push_back(y);
            }
    }
    return dist;
}

Distance distance(const Graph &g, Vertex u, Vertex v)
{
    if (!g.contains(v))
        throw std::invalid_argument("vertex out of range");
    return distances_from(g, u)[static_cast<std::size_t>(v)];
}

Distance diameter(const Graph &g)
{
    if (g.order() < 1)
        throw std::invalid_argument("diameter of empty graph");
    Distance best(0);
    for (Vertex u = 0; u < g.order(); ++u)
        for (const auto &d : distances_from(g, u)) {
            if (!d.is_finite())
                return Distance::infinite();
            best = std::max(best, d);
        }
    return best;
}

std::vector<Vertex> common_neighbors(const Graph &g, Vertex u, Vertex v)
{
    if (u == v)
        throw std::invalid_argument("common_neighbors requires distinct vertices");
    if (!g.contains(u) || !g.contains(v))
        throw std::invalid_argument("vertex out of range");
    std::vector<Vertex> out;
    auto a = g.neighbors(u), b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int common_neighbor_count(const Graph &g, Vertex u, Vertex v)
{
    return static_cast<int>(common_neighbors(g, u, v).size());
}

std::optional<Bipartition> bipartition(const Graph &g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < g.order(); ++v)
        (side[v] == 0 ? parts.class_a : parts.class_b).push_back(v);
    return parts;
}

bool is_connected(const Graph &g)
{
    if (g.order() < 1)
        throw std::invalid_argument("connectivity of empty graph");
    const auto dist = distances_from(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](const Distance &d) { return d.is_finite(); });
}

bool is_complete_bipartite(const Graph &g, const Bipartition &parts)
{
    return static_cast<long long>(g.size()) ==
           static_cast<long long>(parts.class_a.size()) * static_cast<long long>(parts.class_b.size());
}

} // namespace rainbow
