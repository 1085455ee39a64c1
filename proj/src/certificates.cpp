#include "subsec/certificates.hpp"

namespace subsec {

namespace {

void require_k(const SubdivisionMap& map, std::size_t k, const char* name) {
    if (map.k() != k)
        throw GraphError(std::string(name) + " needs k=" + std::to_string(k) + ", got k=" + std::to_string(map.k()));
}

void require_edges(const SubdivisionMap& map, const char* name) {
    if (map.base().m() == 0) throw GraphError(std::string(name) + " needs a base graph with at least one edge");
}

Certificate finish(std::string id, VertexSet set, std::size_t claimed, const SubdivisionMap& map) {
    Certificate c{std::move(id), std::move(set), claimed, false};
    c.validated = is_secure_dominating(map.derived(), c.set);
    return c;
}

// The same positions (measured from the smaller endpoint) on every superedge.
VertexSet per_superedge(const SubdivisionMap& map, const std::vector<std::size_t>& positions) {
    VertexSet s(map.derived().n());
    for (auto [u, v] : map.base().edges())
        for (auto l : positions) s.insert(map.superedge_vertex(u, v, l));
    return s;
}

}  // namespace

Decomposition decompose(std::size_t n) {
    if (n < 6) throw std::invalid_argument("decompose needs n >= 6, got " + std::to_string(n));
    Decomposition d{n, n / 7, std::nullopt};
    switch (n % 7) {
        case 6: d.k = (n + 1) / 7; d.r = -1; break;
        case 1: d.r = 1; break;
        case 3: d.r = 3; break;
        case 5: d.r = 5; break;
        default: break;
    }
    return d;
}

std::vector<std::size_t> general_positions(const Decomposition& d) {
    if (d.residue_024())
        throw std::invalid_argument("n=" + std::to_string(d.n) + " is 0, 2 or 4 mod 7; no general construction");
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < d.k; ++i)
        for (std::size_t off : {1, 3, 5}) pos.push_back(7 * i + off);
    // F_uv: r/2 + 1 trailing odd positions n-1, n-3, ... (none for r = -1).
    const int tail = (*d.r + 1) / 2;
    for (int j = tail; j >= 1; --j) pos.push_back(d.n - static_cast<std::size_t>(2 * j - 1));
    return pos;
}

std::pair<Certificate, Certificate> cert_half(const SubdivisionMap& map) {
    require_k(map, 2, "cert_half");
    require_edges(map, "cert_half");
    const Graph& g = map.base();
    if (is_star(g)) throw GraphError("cert_half: base graph is a star");
    if (!is_connected(g)) throw GraphError("cert_half: base graph is disconnected");

    VertexSet internal = per_superedge(map, {1});
    VertexSet original(map.derived().n());
    for (VertexId u = 0; u < g.n(); ++u) original.insert(u);
    return {finish("g12-internal", std::move(internal), g.m(), map),
            finish("g12-original", std::move(original), g.n(), map)};
}

Certificate cert_star(const SubdivisionMap& map) {
    const Graph& g = map.base();
    if (!is_star(g)) throw GraphError("cert_star: base graph is not a star");
    if (map.k() != 2 && map.k() != 3)
        throw GraphError("cert_star supports k=2 or k=3, got k=" + std::to_string(map.k()));
    VertexId center = 0;
    while (g.degree(center) != g.n() - 1) ++center;
    VertexSet s(map.derived().n());
    s.insert(center);
    for (VertexId leaf = 0; leaf < g.n(); ++leaf)
        if (leaf != center) s.insert(map.superedge_vertex(center, leaf, map.k() - 1));
    return finish(map.k() == 2 ? "star2" : "star3", std::move(s), g.n(), map);
}

Certificate cert_third(const SubdivisionMap& map) {
    require_k(map, 3, "cert_third");
    return finish("g13", per_superedge(map, {1, 2}), 2 * map.base().m(), map);
}

Certificate cert_quarter(const SubdivisionMap& map) {
    require_k(map, 4, "cert_quarter");
    return finish("g14", per_superedge(map, {1, 3}), 2 * map.base().m(), map);
}

Certificate cert_fifth(const SubdivisionMap& map) {
    require_k(map, 5, "cert_fifth");
    require_edges(map, "cert_fifth");
    const Graph& g = map.base();
    const std::size_t delta = max_degree(g);
    VertexId w = 0;
    while (g.degree(w) != delta) ++w;

    VertexSet s = per_superedge(map, {1, 2, 4});
    const auto& spokes = g.neighbors(w);
    for (auto u = spokes.find_first(); u != Bitset::npos; u = spokes.find_next(u))
        s.erase(map.superedge_vertex(w, u, 1));
    s.insert(w);
    return finish("g15", std::move(s), 3 * g.m() - delta + 1, map);
}

Certificate cert_general(const SubdivisionMap& map) {
    const Decomposition d = decompose(map.k());
    auto positions = general_positions(d);
    return finish("g16", per_superedge(map, positions), path_secure_formula(map.k() + 1) * map.base().m(), map);
}

}  // namespace subsec
