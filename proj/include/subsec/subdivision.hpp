#pragma once

#include <string>
#include <variant>
#include <vector>

#include "subsec/graph.hpp"

namespace subsec {

/// A vertex of the base graph kept in the subdivision.
struct Original {
    VertexId u;
    friend bool operator==(const Original&, const Original&) = default;
};

/// x_l on the superedge of base edge (u, v), u < v, at distance l from u.
struct Internal {
    VertexId u;
    VertexId v;
    std::size_t l;
    friend bool operator==(const Internal&, const Internal&) = default;
};

using SubdividedVertex = std::variant<Original, Internal>;

/// "Original(3)" or "Internal(0,4,2)".
std::string to_string(const SubdividedVertex& x);

/// G^{1/k} together with the labeling between its vertices and the parts of G.
///
/// Original vertices keep ids 0..n-1. Internal vertices follow in the order of
/// the sorted base edge list, then by increasing l, so edge number e contributes
/// ids n + e(k-1) .. n + e(k-1) + k-2.
class SubdivisionMap {
public:
    SubdivisionMap(Graph base, std::size_t k);

    const Graph& base() const { return base_; }
    const Graph& derived() const { return derived_; }
    std::size_t k() const { return k_; }

    SubdividedVertex label(VertexId id) const;

    /// Derived id of x_l counted from u along the superedge of base edge {u, v}.
    /// Either orientation may be passed; for u > v this is x_{k-l} of (v, u).
    VertexId superedge_vertex(VertexId u, VertexId v, std::size_t l) const;

    /// [u, x_1, ..., x_{k-1}, v] for the base edge, walked from `u`.
    std::vector<VertexId> superedge(VertexId u, VertexId v) const;

    /// Tab-separated "id<TAB>label" table, one line per derived vertex.
    std::string label_table() const;

private:
    std::size_t edge_index(VertexId u, VertexId v) const;  // u < v

    Graph base_;
    std::size_t k_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    Graph derived_;
};

SubdivisionMap subdivide(const Graph& g, std::size_t k);

}  // namespace subsec
