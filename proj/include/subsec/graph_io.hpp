#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subsec/graph.hpp"

namespace subsec {

/// Malformed graph text. `line()` is 1-based, or 0 when the error is not tied
/// to a position in a stream.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class GraphFormat { Graph6, EdgeList };

GraphFormat parse_format(std::string_view name);  // "g6" | "edges"

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are stripped.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// Edge-list text: '#' comments, a "p <n>" line, then "e <u> <v>" lines
/// with 0-based ids.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

struct GraphRecord {
    std::string id;  // graph6 string of the graph as read
    Graph graph;
    std::size_t line = 0;
};

/// Reads every graph from a stream. graph6 input is one graph per line
/// (blank lines skipped); edge-list input is a single graph.
std::vector<GraphRecord> read_graphs(std::istream& in, GraphFormat format);

}  // namespace subsec
