#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge &) const = default;
};

/// Shortest-path length, or the distinguished infinite value for vertices in
/// different components. Reading the value of an infinite distance throws.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(int length) : length_(length) {}

    static constexpr Distance infinite() { return Distance{}; }

    constexpr bool is_finite() const { return length_ >= 0; }

    int value() const
    {
        if (!is_finite())
            throw std::domain_error("arithmetic on infinite distance");
        return length_;
    }

    constexpr bool operator==(const Distance &) const = default;

    constexpr std::strong_ordering operator<=>(const Distance &o) const
    {
        if (is_finite() != o.is_finite())
            return is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
        return length_ <=> o.length_;
    }

    std::string to_string() const { return is_finite() ? std::to_string(length_) : "inf"; }

private:
    int length_ = -1;
};

/// Simple undirected graph on vertices 0..n-1. Edges are kept in canonical
/// lexicographic order of (min, max); the position in that order is the edge id.
class Graph {
public:
    Graph() = default;

    /// Deduplicates the edge list. Throws std::invalid_argument on loops or
    /// out-of-range vertex ids.
    Graph(int n, std::span<const Edge> edge_list);
    Graph(int n, std::initializer_list<Edge> edge_list)
        : Graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()))
    {
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// Neighbors of v in increasing order.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const { return inc_[static_cast<std::size_t>(v)]; }

    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }
    std::optional<EdgeId> edge_index(Vertex u, Vertex v) const;

    bool contains(Vertex v) const { return v >= 0 && v < n_; }
    bool is_complete() const { return 2LL * size() == static_cast<long long>(n_) * (n_ - 1); }

    bool operator==(const Graph &o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> inc_;
};

struct Bipartition {
    std::vector<Vertex> class_a;
    std::vector<Vertex> class_b;

    bool operator==(const Bipartition &) const = default;
};

Graph build_graph(int n, std::span<const Edge> edge_list);

int min_degree(const Graph &g);

/// Minimum of d(u)+d(v) over non-adjacent pairs u != v. Throws on complete graphs.
int sigma2(const Graph &g);

Distance distance(const Graph &g, Vertex u, Vertex v);
/// Breadth-first distances from source to every vertex.
std::vector<Distance> distances_from(const Graph &g, Vertex source);
Distance diameter(const Graph &g);

std::vector<Vertex> common_neighbors(const Graph &g, Vertex u, Vertex v);
int common_neighbor_count(const Graph &g, Vertex u, Vertex v);

/// BFS two-coloring; in each component the lowest vertex lands in class_a.
std::optional<Bipartition> bipartition(const Graph &g);
bool is_connected(const Graph &g);

/// True if g is bipartite with every cross-class pair adjacent.
bool is_complete_bipartite(const Graph &g, const Bipartition &parts);

} // namespace rainbow
