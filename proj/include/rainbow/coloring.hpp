#pragma once

#include "rainbow/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

using Color = int;
using Path = std::vector<Vertex>;

/// Unordered vertex pair stored with u < v.
struct VertexPair {
    Vertex u;
    Vertex v;

    static VertexPair of(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }
    auto operator<=>(const VertexPair &) const = default;
};

/// Total assignment of colors 0..k-1 to the edges of a graph, indexed by
/// canonical edge id.
class EdgeColoring {
public:
    EdgeColoring() = default;
    /// Throws std::invalid_argument when k < 1, the length differs from
    /// g.size(), or a color is outside 0..k-1.
    EdgeColoring(const Graph &g, int k, std::vector<Color> colors);
    /// Same checks as above against a graph of order n with colors.size() edges.
    static EdgeColoring from_parts(int n, int k, std::vector<Color> colors);

    int palette() const { return k_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(colors_.size()); }
    const std::vector<Color> &colors() const { return colors_; }
    Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }

    bool matches(const Graph &g) const { return n_ == g.order() && edge_count() == g.size(); }

    bool operator==(const EdgeColoring &) const = default;

private:
    int k_ = 1;
    int n_ = 0;
    std::vector<Color> colors_;
};

/// One rainbow path per unordered pair of distinct vertices.
struct RainbowWitness {
    std::map<VertexPair, Path> pairs;

    bool operator==(const RainbowWitness &) const = default;
};

struct SearchLimits {
    /// Cap on distinct colors tracked by the (vertex, color subset) search.
    int max_colors = 20;
};

struct VerifyOptions {
    SearchLimits limits{};
    int workers = 1;
};

struct VerifyResult {
    bool connected = false;
    RainbowWitness witness;                // complete when connected
    std::optional<VertexPair> failing_pair; // lexicographically first failure

    bool operator==(const VerifyResult &) const = default;
};

/// Each edge color drawn independently and uniformly from 0..k-1 with a
/// SplitMix64 stream seeded by `seed`, in canonical edge order.
EdgeColoring sample_uniform_coloring(const Graph &g, int k, std::uint64_t seed);

/// Throws std::invalid_argument if `path` is not a path of g.
bool is_rainbow_path(const Graph &g, const EdgeColoring &c, std::span<const Vertex> path);

/// Shortest rainbow u-v path, ties broken by the lexicographically smallest
/// color set and then by discovery order. nullopt if none exists.
std::optional<Path> rainbow_reachable(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v,
                                      const SearchLimits &limits = {});

/// Shortest rainbow paths from `source` to every vertex (entry for the source
/// itself is the single-vertex path).
std::vector<std::optional<Path>> rainbow_paths_from(const Graph &g, const EdgeColoring &c, Vertex source,
                                                    const SearchLimits &limits = {});

VerifyResult is_rainbow_connected(const Graph &g, const EdgeColoring &c, const VerifyOptions &options = {});

struct LasVegasOptions {
    int max_iters = 1000;
    /// Iterations evaluated speculatively in parallel; the reported result is
    /// always the lowest successful iteration index.
    int workers = 1;
    SearchLimits limits{};
};

struct LasVegasResult {
    std::optional<EdgeColoring> coloring;
    RainbowWitness witness;
    int iterations = 0; // 1-based index of the certified draw, or max_iters on exhaustion
    int failures = 0;
    std::vector<std::pair<VertexPair, int>> failing_pairs; // first failing pair per failed draw, counted

    bool succeeded() const { return coloring.has_value(); }
    bool operator==(const LasVegasResult &) const = default;
};

/// Draws colorings with sub-seeds derive_seed(seed, i) for i = 0, 1, ... and
/// returns the first one certified by is_rainbow_connected.
LasVegasResult las_vegas_color(const Graph &g, int k, std::uint64_t seed, const LasVegasOptions &options = {});

/// Removes cycles from a walk, keeping the first visit of each vertex.
Path shortcut_walk(std::span<const Vertex> walk);

} // namespace rainbow
