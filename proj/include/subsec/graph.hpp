#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace subsec {

using VertexId = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Raised for malformed graph construction or an operation applied to a
/// graph that violates its precondition.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Subset of the vertices of a graph with `universe` vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe) {}
    VertexSet(std::size_t universe, const std::vector<VertexId>& members);

    static VertexSet from_bits(Bitset bits) {
        VertexSet s;
        s.bits_ = std::move(bits);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(VertexId v) const { return v < bits_.size() && bits_.test(v); }

    void insert(VertexId v);
    void erase(VertexId v);

    /// Members in ascending order.
    std::vector<VertexId> members() const;
    const Bitset& bits() const { return bits_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    Bitset bits_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    std::size_t n() const { return adj_.size(); }
    std::size_t m() const { return m_; }

    const Bitset& neighbors(VertexId v) const { return adj_.at(v); }
    /// N[v] = N(v) + v.
    Bitset closed_neighborhood(VertexId v) const;
    std::size_t degree(VertexId v) const { return adj_.at(v).count(); }
    bool has_edge(VertexId u, VertexId v) const {
        return u < n() && v < n() && adj_[u].test(v);
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::vector<Bitset> adj_;
    std::size_t m_ = 0;
};

/// Builds a graph from an edge list. Duplicate pairs (in either orientation)
/// collapse to one edge; throws GraphError on out-of-range ids or self-loops.
Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

std::size_t max_degree(const Graph& g);
std::vector<std::size_t> degree_sequence(const Graph& g);  // sorted descending

/// True iff g is K_{1,m} for some m >= 1. K_2 counts.
bool is_star(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace subsec
