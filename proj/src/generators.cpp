#include "subsec/generators.hpp"

#include <random>
#include <string>

namespace subsec {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void require(bool ok, const std::string& msg) {
    if (!ok) throw GraphError(msg);
}

}  // namespace

Family parse_family(std::string_view name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "complete") return Family::Complete;
    if (name == "wheel") return Family::Wheel;
    if (name == "random") return Family::Random;
    throw GraphError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::Complete: return "complete";
        case Family::Wheel: return "wheel";
        case Family::Random: return "random";
    }
    return "?";
}

Graph path_graph(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    EdgeList e;
    for (VertexId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return make_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    EdgeList e;
    for (VertexId v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return make_graph(n, e);
}

Graph star_graph(std::size_t n) {
    require(n >= 2, "star needs n >= 2");
    EdgeList e;
    for (VertexId v = 1; v < n; ++v) e.emplace_back(0, v);
    return make_graph(n, e);
}

Graph complete_graph(std::size_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    EdgeList e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

Graph wheel_graph(std::size_t rim) {
    require(rim >= 3, "wheel needs a rim of at least 3 vertices");
    EdgeList e;
    for (VertexId v = 0; v < rim; ++v) {
        e.emplace_back(v, (v + 1) % rim);
        e.emplace_back(v, rim);
    }
    return make_graph(rim + 1, e);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    require(n >= 1, "random graph needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    EdgeList e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            // 53-bit uniform in [0, 1); spelled out so corpora match across standard libraries.
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) e.emplace_back(u, v);
        }
    return make_graph(n, e);
}

Graph generate(Family family, std::size_t n, std::optional<double> p, std::optional<std::uint64_t> seed) {
    switch (family) {
        case Family::Path: return path_graph(n);
        case Family::Cycle: return cycle_graph(n);
        case Family::Star: return star_graph(n);
        case Family::Complete: return complete_graph(n);
        case Family::Wheel: return wheel_graph(n);
        case Family::Random:
            require(p.has_value(), "random family requires an edge probability");
            require(seed.has_value(), "random family requires a seed");
            return random_graph(n, *p, *seed);
    }
    throw GraphError("unknown family");
}

}  // namespace subsec
