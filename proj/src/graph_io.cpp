#include "subsec/graph_io.hpp"

#include <istream>
#include <sstream>

namespace subsec {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

int sextet(char c) {
    if (c < 63 || c > 126) throw ParseError(std::string("graph6: byte out of range: '") + c + "'");
    return c - 63;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

GraphFormat parse_format(std::string_view name) {
    if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
    if (name == "edges") return GraphFormat::EdgeList;
    throw ParseError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
    if (line.empty()) throw ParseError("graph6: empty line");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] != '~') {
        n = static_cast<std::size_t>(sextet(line[0]));
        pos = 1;
    } else {
        std::size_t width = 3;
        pos = 1;
        if (line.size() > 1 && line[1] == '~') {
            width = 6;
            pos = 2;
        }
        if (line.size() < pos + width) throw ParseError("graph6: truncated size header");
        for (std::size_t i = 0; i < width; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(line[pos + i]));
        pos += width;
        if ((width == 3 && n < 63) || (width == 6 && n < 258048))
            throw ParseError("graph6: non-canonical size header");
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body_len = (bits + 5) / 6;
    if (line.size() - pos < body_len)
        throw ParseError("graph6: truncated body (n=" + std::to_string(n) + " needs " + std::to_string(body_len) +
                         " bytes, got " + std::to_string(line.size() - pos) + ")");
    if (line.size() - pos > body_len)
        throw ParseError("graph6: body longer than n=" + std::to_string(n) + " allows");

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++k) {
            int byte = sextet(line[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    for (std::size_t b = pos; b < line.size(); ++b) sextet(line[b]);
    return make_graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields{std::string(line)};
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            if (have_header) throw ParseError("edge list: duplicate 'p' line", lineno);
            long long value = -1;
            if (!(fields >> value) || value < 0) throw ParseError("edge list: bad vertex count", lineno);
            n = static_cast<std::size_t>(value);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError("edge list: 'e' before 'p' line", lineno);
            long long u = -1, v = -1;
            if (!(fields >> u >> v) || u < 0 || v < 0) throw ParseError("edge list: bad edge", lineno);
            if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
                throw ParseError("edge list: vertex id out of range", lineno);
            if (u == v) throw ParseError("edge list: self-loop", lineno);
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } else {
            throw ParseError("edge list: unknown line tag '" + tag + "'", lineno);
        }
        std::string extra;
        if (fields >> extra) throw ParseError("edge list: trailing text '" + extra + "'", lineno);
    }
    if (!have_header) throw ParseError("edge list: missing 'p <n>' line", lineno);
    return make_graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::vector<GraphRecord> read_graphs(std::istream& in, GraphFormat format) {
    std::vector<GraphRecord> out;
    if (format == GraphFormat::EdgeList) {
        Graph g = parse_edge_list(in);
        out.push_back({emit_graph6(g), std::move(g), 1});
        return out;
    }
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = trim(raw);
        if (line.empty() || line == kGraph6Header) continue;
        try {
            Graph g = parse_graph6(line);
            out.push_back({emit_graph6(g), std::move(g), lineno});
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        } catch (const GraphError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return out;
}

}  // namespace subsec
