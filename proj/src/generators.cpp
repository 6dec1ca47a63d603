#include "rainbow/generators.hpp"

#include "rainbow/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::complete, "complete"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::wheel, "wheel"},
    {Family::star, "star"},
    {Family::petersen, "petersen"},
    {Family::complete_minus_matching, "complete_minus_matching"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::bipartite_minus_matching, "bipartite_minus_matching"},
    {Family::random_min_degree, "random_min_degree"},
    {Family::random_diam2, "random_diam2"},
};

void require(bool ok, const std::string &message)
{
    if (!ok)
        throw std::invalid_argument(message);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

Graph petersen()
{
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            subsets.emplace_back(a, b);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) {
            auto [a, b] = subsets[u];
            auto [c, d] = subsets[v];
            if (a != c && a != d && b != c && b != d)
                edges.push_back({u, v});
        }
    return Graph(10, edges);
}

/// One random draw plus augmentation up to the degree target.
Graph random_min_degree_once(int n, int delta, SplitMix64 &rng)
{
    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    auto link = [&](Vertex a, Vertex b) {
        adj[static_cast<std::size_t>(a) * n + b] = adj[static_cast<std::size_t>(b) * n + a] = 1;
        ++deg[a];
        ++deg[b];
    };
    auto linked = [&](Vertex a, Vertex b) { return adj[static_cast<std::size_t>(a) * n + b] != 0; };

    const double p = n > 1 ? static_cast<double>(delta) / (n - 1) : 0.0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform_real() < p)
                link(u, v);

    for (;;) {
        std::vector<Vertex> deficient;
        for (Vertex v = 0; v < n; ++v)
            if (deg[v] < delta)
                deficient.push_back(v);
        if (deficient.empty())
            break;
        const Vertex x = deficient[rng.uniform_below(deficient.size())];
        std::vector<Vertex> partners;
        for (Vertex y : deficient)
            if (y != x && !linked(x, y))
                partners.push_back(y);
        if (partners.empty())
            for (Vertex y = 0; y < n; ++y)
                if (y != x && !linked(x, y))
                    partners.push_back(y);
        link(x, partners[rng.uniform_below(partners.size())]);
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (linked(u, v))
                edges.push_back({u, v});
    return Graph(n, edges);
}

Graph random_min_degree(const FamilySpec &spec, bool need_diameter_two)
{
    const int n = spec.n;
    require(n >= 2, "random families need n >= 2");
    require(spec.delta_target >= 0 && spec.delta_target <= n - 1, "delta_target must lie in 0..n-1");
    if (need_diameter_two)
        require(spec.delta_target <= n - 2 && n >= 3, "diameter 2 needs a non-complete graph");
    const bool allow_complete = spec.delta_target == n - 1;

    for (int attempt = 0; attempt <= spec.max_retries; ++attempt) {
        SplitMix64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
        Graph g = random_min_degree_once(n, spec.delta_target, rng);
        if (!allow_complete && g.is_complete())
            continue;
        if (need_diameter_two && diameter(g) != Distance(2))
            continue;
        return g;
    }
    throw std::runtime_error("retry budget exhausted for " + std::string(to_string(spec.family)));
}

} // namespace

std::string_view to_string(Family family)
{
    for (const auto &[f, name] : kFamilyNames)
        if (f == family)
            return name;
    return "?";
}

std::optional<Family> parse_family(std::string_view text)
{
    for (const auto &[f, name] : kFamilyNames)
        if (name == text)
            return f;
    return std::nullopt;
}

bool is_seeded(Family family) { return family == Family::random_min_degree || family == Family::random_diam2; }

Graph generate(const FamilySpec &spec)
{
    const int n = spec.n;
    std::vector<Edge> edges;
    switch (spec.family) {
    case Family::complete:
        require(n >= 1, "complete graph needs n >= 1");
        return complete_graph(n);
    case Family::path:
        require(n >= 1, "path needs n >= 1");
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        return Graph(n, edges);
    case Family::cycle:
        require(n >= 3, "cycle needs n >= 3");
        for (Vertex v = 0; v < n; ++v)
            edges.push_back({v, (v + 1) % n});
        return Graph(n, edges);
    case Family::wheel:
        require(n >= 4, "wheel needs n >= 4 (hub plus a rim cycle)");
        for (Vertex v = 1; v < n; ++v) {
            edges.push_back({0, v});
            edges.push_back({v, v + 1 < n ? v + 1 : 1});
        }
        return Graph(n, edges);
    case Family::star:
        require(n >= 2, "star needs n >= 2");
        for (Vertex v = 1; v < n; ++v)
            edges.push_back({0, v});
        return Graph(n, edges);
    case Family::petersen:
        require(n == 0 || n == 10, "petersen graph has n = 10");
        return petersen();
    case Family::complete_minus_matching:
        require(n >= 2 && n % 2 == 0, "complete_minus_matching needs even n >= 2");
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!(u % 2 == 0 && v == u + 1))
                    edges.push_back({u, v});
        return Graph(n, edges);
    case Family::complete_bipartite:
        require(spec.s >= 1 && spec.t >= 1, "complete_bipartite needs s, t >= 1");
        for (Vertex a = 0; a < spec.s; ++a)
            for (Vertex b = 0; b < spec.t; ++b)
                edges.push_back({a, spec.s + b});
        return Graph(spec.s + spec.t, edges);
    case Family::bipartite_minus_matching:
        require(spec.s >= 2, "bipartite_minus_matching needs s >= 2");
        for (Vertex a = 0; a < spec.s; ++a)
            for (Vertex b = 0; b < spec.s; ++b)
                if (a != b)
                    edges.push_back({a, spec.s + b});
        return Graph(2 * spec.s, edges);
    case Family::random_min_degree:
        return random_min_degree(spec, false);
    case Family::random_diam2:
        return random_min_degree(spec, true);
    }
    throw std::logic_error("unknown family");
}

} // namespace rainbow
