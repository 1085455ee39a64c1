#include "subsec/subdivision.hpp"

#include <algorithm>
#include <sstream>

namespace subsec {

std::string to_string(const SubdividedVertex& x) {
    if (const auto* o = std::get_if<Original>(&x)) return "Original(" + std::to_string(o->u) + ")";
    const auto& in = std::get<Internal>(x);
    return "Internal(" + std::to_string(in.u) + "," + std::to_string(in.v) + "," + std::to_string(in.l) + ")";
}

SubdivisionMap::SubdivisionMap(Graph base, std::size_t k) : base_(std::move(base)), k_(k), edges_(base_.edges()) {
    if (k_ < 1) throw GraphError("subdivision parameter k must be >= 1");
    if (k_ == 1) {
        derived_ = base_;
        return;
    }
    const std::size_t n = base_.n();
    std::vector<std::pair<VertexId, VertexId>> derived_edges;
    derived_edges.reserve(k_ * edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        VertexId prev = u;
        for (std::size_t l = 1; l < k_; ++l) {
            VertexId x = n + e * (k_ - 1) + (l - 1);
            derived_edges.emplace_back(prev, x);
            prev = x;
        }
        derived_edges.emplace_back(prev, v);
    }
    derived_ = make_graph(n + (k_ - 1) * edges_.size(), derived_edges);
}

std::size_t SubdivisionMap::edge_index(VertexId u, VertexId v) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v))
        throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge of the base graph");
    return static_cast<std::size_t>(it - edges_.begin());
}

SubdividedVertex SubdivisionMap::label(VertexId id) const {
    const std::size_t n = base_.n();
    if (id < n) return Original{id};
    if (id >= derived_.n()) throw GraphError("vertex " + std::to_string(id) + " not in subdivision");
    const std::size_t offset = id - n;
    const auto [u, v] = edges_[offset / (k_ - 1)];
    return Internal{u, v, offset % (k_ - 1) + 1};
}

VertexId SubdivisionMap::superedge_vertex(VertexId u, VertexId v, std::size_t l) const {
    if (l < 1 || l >= k_)
        throw GraphError("internal position l=" + std::to_string(l) + " outside 1.." + std::to_string(k_ - 1));
    if (u > v) {
        std::swap(u, v);
        l = k_ - l;
    }
    return base_.n() + edge_index(u, v) * (k_ - 1) + (l - 1);
}

std::vector<VertexId> SubdivisionMap::superedge(VertexId u, VertexId v) const {
    std::vector<VertexId> path{u};
    if (!base_.has_edge(u, v))
        throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge of the base graph");
    for (std::size_t l = 1; l < k_; ++l) path.push_back(superedge_vertex(u, v, l));
    path.push_back(v);
    return path;
}

std::string SubdivisionMap::label_table() const {
    std::ostringstream out;
    for (VertexId id = 0; id < derived_.n(); ++id) out << id << '\t' << to_string(label(id)) << '\n';
    return out.str();
}

SubdivisionMap subdivide(const Graph& g, std::size_t k) { return SubdivisionMap(g, k); }

}  // namespace subsec
