#include "subsec/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace subsec {

VertexSet::VertexSet(std::size_t universe, const std::vector<VertexId>& members) : bits_(universe) {
    for (auto v : members) insert(v);
}

void VertexSet::insert(VertexId v) {
    if (v >= bits_.size())
        throw GraphError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(bits_.size()));
    bits_.set(v);
}

void VertexSet::erase(VertexId v) {
    if (v < bits_.size()) bits_.reset(v);
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    out.reserve(bits_.count());
    for (auto v = bits_.find_first(); v != Bitset::npos; v = bits_.find_next(v)) out.push_back(v);
    return out;
}

Bitset Graph::closed_neighborhood(VertexId v) const {
    Bitset b = adj_.at(v);
    b.set(v);
    return b;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n(); ++u)
        for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    return g;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d(g.n());
    for (VertexId v = 0; v < g.n(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool is_star(const Graph& g) {
    if (g.n() < 2) return false;
    return g.m() == g.n() - 1 && max_degree(g) == g.n() - 1;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    Bitset seen(g.n());
    std::vector<VertexId> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        const auto& nb = g.neighbors(v);
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
    }
    return seen.all();
}

}  // namespace subsec
