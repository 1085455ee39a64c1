#include "subsec/domination.hpp"

#include <string>

namespace subsec {

namespace {

void require_same_universe(const Graph& g, const VertexSet& d) {
    if (d.universe() != g.n())
        throw GraphError("vertex set universe " + std::to_string(d.universe()) + " does not match graph order " +
                         std::to_string(g.n()));
}

Bitset coverage(const Graph& g, const Bitset& d) {
    Bitset covered(g.n());
    for (auto v = d.find_first(); v != Bitset::npos; v = d.find_next(v)) covered |= g.closed_neighborhood(v);
    return covered;
}

// Vertices dominated by exactly one member of d.
Bitset covered_once(const Graph& g, const Bitset& d) {
    Bitset once(g.n()), many(g.n());
    for (auto v = d.find_first(); v != Bitset::npos; v = d.find_next(v)) {
        Bitset nb = g.closed_neighborhood(v);
        many |= once & nb;
        once |= nb;
    }
    return once - many;
}

// `uncovered` is the set of vertices D misses; u must reach those as well.
bool swap_keeps_domination(const Graph& g, const Bitset& d, const Bitset& once, const Bitset& uncovered, VertexId v,
                           VertexId u, SwapCheck mode) {
    if (mode == SwapCheck::Full) {
        Bitset swapped = d;
        swapped.reset(v);
        swapped.set(u);
        return coverage(g, swapped).all();
    }
    // Only vertices privately dominated by v can lose coverage; u must reach them.
    Bitset orphaned = (g.closed_neighborhood(v) & once) | uncovered;
    return orphaned.is_subset_of(g.closed_neighborhood(u));
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
    require_same_universe(g, d);
    return coverage(g, d.bits()).all();
}

std::vector<VertexId> defenders(const Graph& g, const VertexSet& d, VertexId u, SwapCheck mode) {
    require_same_universe(g, d);
    if (u >= g.n()) throw GraphError("vertex " + std::to_string(u) + " outside graph");
    if (d.contains(u)) throw GraphError("vertex " + std::to_string(u) + " is already in the set");
    const Bitset& members = d.bits();
    const Bitset once = covered_once(g, members);
    const Bitset uncovered = ~coverage(g, members);
    std::vector<VertexId> out;
    const Bitset candidates = g.neighbors(u) & members;
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v))
        if (swap_keeps_domination(g, members, once, uncovered, v, u, mode)) out.push_back(v);
    return out;
}

bool is_secure_dominating(const Graph& g, const VertexSet& d, SwapCheck mode) {
    require_same_universe(g, d);
    const Bitset& members = d.bits();
    if (!coverage(g, members).all()) return false;
    const Bitset once = covered_once(g, members);
    const Bitset none(g.n());
    for (VertexId u = 0; u < g.n(); ++u) {
        if (members.test(u)) continue;
        const Bitset candidates = g.neighbors(u) & members;
        bool defended = false;
        for (auto v = candidates.find_first(); v != Bitset::npos && !defended; v = candidates.find_next(v))
            defended = swap_keeps_domination(g, members, once, none, v, u, mode);
        if (!defended) return false;
    }
    return true;
}

std::size_t path_secure_formula(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    return (3 * n + 6) / 7;
}

std::string to_string(SolveStatus s) { return s == SolveStatus::Exact ? "exact" : "skipped"; }

}  // namespace subsec
