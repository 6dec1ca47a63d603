#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace rainbow {

namespace {

struct Line {
    int number;
    std::vector<long long> fields;
};

/// Splits into non-comment lines of single-space separated decimal integers.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        if (raw.empty() || raw.front() == '#')
            continue;

        Line line{number, {}};
        std::size_t pos = 0;
        while (pos <= raw.size()) {
            const auto next = raw.find(' ', pos);
            const auto token = raw.substr(pos, next == std::string_view::npos ? raw.size() - pos : next - pos);
            long long value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
                throw FormatError(number, "expected a decimal integer, got '" + std::string(token) + "'");
            line.fields.push_back(value);
            if (next == std::string_view::npos)
                break;
            pos = next + 1;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

void expect_fields(const Line &line, std::size_t count, const char *what)
{
    if (line.fields.size() != count)
        throw FormatError(line.number, std::string("malformed ") + what + ": expected " + std::to_string(count) +
                                           " fields, got " + std::to_string(line.fields.size()));
}

} // namespace

Graph parse_graph_text(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw FormatError(0, "missing header");
    expect_fields(lines[0], 2, "header");
    const long long n = lines[0].fields[0], m = lines[0].fields[1];
    if (n < 0 || m < 0 || n > (1 << 24))
        throw FormatError(lines[0].number, "malformed header");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw FormatError(0, "edge count mismatch: header says " + std::to_string(m) + ", found " +
                                 std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        expect_fields(lines[i], 2, "edge");
        const auto u = lines[i].fields[0], v = lines[i].fields[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError(lines[i].number, "vertex id out of range");
        if (u == v)
            throw FormatError(lines[i].number, "loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    Graph g(static_cast<int>(n), edges);
    if (g.size() != m)
        throw FormatError(0, "duplicate edge in edge list");
    return g;
}

std::string format_graph_text(const Graph &g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

EdgeColoring parse_coloring_text(std::string_view text, const Graph &g)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw FormatError(0, "missing header");
    expect_fields(lines[0], 1, "header");
    const long long k = lines[0].fields[0];
    if (k < 1 || k > (1 << 24))
        throw FormatError(lines[0].number, "palette size must be positive");
    if (static_cast<long long>(lines.size()) - 1 != g.size())
        throw FormatError(0, "edge count mismatch: graph has " + std::to_string(g.size()) + " edges, coloring has " +
                                 std::to_string(lines.size() - 1));

    std::vector<std::optional<Color>> colors(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        expect_fields(lines[i], 3, "coloring line");
        const auto u = lines[i].fields[0], v = lines[i].fields[1], c = lines[i].fields[2];
        if (c < 0 || c >= k)
            throw FormatError(lines[i].number, "color " + std::to_string(c) + " out of range 0.." +
                                                   std::to_string(k - 1));
        std::optional<EdgeId> e;
        if (u >= 0 && v >= 0 && u < g.order() && v < g.order())
            e = g.edge_index(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!e)
            throw FormatError(lines[i].number,
                              "edge " + std::to_string(u) + " " + std::to_string(v) + " not in graph");
        if (colors[*e])
            throw FormatError(lines[i].number, "edge listed twice");
        colors[*e] = static_cast<Color>(c);
    }
    std::vector<Color> out;
    out.reserve(colors.size());
    for (const auto &c : colors)
        out.push_back(*c);
    return EdgeColoring(g, static_cast<int>(k), std::move(out));
}

std::string format_coloring_text(const Graph &g, const EdgeColoring &c)
{
    if (!c.matches(g))
        throw std::invalid_argument("coloring does not match graph shape");
    std::ostringstream out;
    out << c.palette() << '\n';
    for (EdgeId e = 0; e < g.size(); ++e)
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c.color(e) << '\n';
    return out.str();
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

} // namespace rainbow
