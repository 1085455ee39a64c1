#include "subsec/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

namespace subsec {

namespace {

void require_order(std::size_t n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw GraphError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got " +
                         std::to_string(n));
}

using AdjRows = std::array<std::uint8_t, kMaxEnumerationOrder>;

AdjRows rows_of(const Graph& g) {
    AdjRows rows{};
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v = 0; v < g.n(); ++v)
            if (g.has_edge(u, v)) rows[u] |= static_cast<std::uint8_t>(1u << v);
    return rows;
}

}  // namespace

std::uint32_t adjacency_code(const Graph& g) {
    require_order(g.n() == 0 ? 1 : g.n());
    std::uint32_t code = 0;
    for (VertexId j = 1; j < g.n(); ++j)
        for (VertexId i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1u : 0u);
    return code;
}

Graph graph_from_code(std::size_t n, std::uint32_t code) {
    require_order(n);
    const std::size_t bits = n * (n - 1) / 2;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++k)
            if ((code >> (bits - 1 - k)) & 1u) edges.emplace_back(i, j);
    return make_graph(n, edges);
}

std::uint32_t canonical_code(const Graph& g) {
    const std::size_t n = g.n();
    if (n <= 1) return 0;
    require_order(n);
    const AdjRows rows = rows_of(g);
    const std::size_t bits = n * (n - 1) / 2;

    std::array<std::uint8_t, kMaxEnumerationOrder> perm{};  // perm[new label] = old vertex
    std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
    std::uint32_t best = adjacency_code(g);
    do {
        // Build the relabeled code bit by bit and stop as soon as its prefix
        // exceeds the best prefix.
        std::uint32_t code = 0;
        std::size_t k = 0;
        bool worse = false;
        for (std::size_t j = 1; j < n && !worse; ++j)
            for (std::size_t i = 0; i < j; ++i, ++k) {
                std::uint32_t bit = (rows[perm[i]] >> perm[j]) & 1u;
                code = (code << 1) | bit;
                std::uint32_t best_prefix = best >> (bits - 1 - k);
                if (code > best_prefix) {
                    worse = true;
                    break;
                }
            }
        if (!worse && code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
    return best;
}

std::vector<Graph> enumerate_all(std::size_t n) {
    require_order(n);
    // Grow classes one vertex at a time: every graph on n vertices is some graph
    // on n-1 vertices plus a new vertex joined to a subset of the old ones.
    std::set<std::uint32_t> layer{0};
    for (std::size_t order = 2; order <= n; ++order) {
        std::set<std::uint32_t> next;
        for (auto code : layer) {
            Graph base = graph_from_code(order - 1, code);
            auto base_edges = base.edges();
            for (std::uint32_t mask = 0; mask < (1u << (order - 1)); ++mask) {
                auto edges = base_edges;
                for (VertexId v = 0; v + 1 < order; ++v)
                    if ((mask >> v) & 1u) edges.emplace_back(v, order - 1);
                next.insert(canonical_code(make_graph(order, edges)));
            }
        }
        layer = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(layer.size());
    for (auto code : layer) out.push_back(graph_from_code(n, code));
    return out;
}

std::vector<Graph> enumerate_connected(std::size_t n) {
    auto all = enumerate_all(n);
    std::vector<Graph> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Graph& g) { return is_connected(g); });
    return out;
}

}  // namespace subsec
