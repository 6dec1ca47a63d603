#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string &what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// Graph text:    "n m" header, then m lines "u v". Lines starting with '#'
//                and blank lines are skipped. Written in canonical order.
// Coloring text: "k" header, then one "u v c" line per edge of the graph.

Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph &g);

/// Edges may appear in any order but must match g's edge set exactly.
EdgeColoring parse_coloring_text(std::string_view text, const Graph &g);
std::string format_coloring_text(const Graph &g, const EdgeColoring &c);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace rainbow
