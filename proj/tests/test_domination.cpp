#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "subsec/domination.hpp"
#include "subsec/enumerate.hpp"
#include "subsec/generators.hpp"
#include "subsec/subdivision.hpp"

using namespace subsec;

namespace {

VertexSet set_of(const Graph& g, std::vector<VertexId> ids) { return VertexSet(g.n(), ids); }

std::vector<bool> flags(const VertexSet& s) {
    std::vector<bool> in(s.universe());
    for (auto v : s.members()) in[v] = true;
    return in;
}

SolverOptions naive() { return {SearchMode::Naive, 1}; }

// Small graphs of mixed shape, including disconnected ones.
std::vector<Graph> corpus(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out{path_graph(1), make_graph(3, {}), make_graph(5, {{0, 1}, {2, 3}})};
    for (int i = 0; i < count; ++i) out.push_back(random_graph(1 + rng() % 12, 0.15 + (rng() % 60) / 100.0, rng()));
    return out;
}

}  // namespace

TEST_CASE("is_dominating") {
    Graph p5 = path_graph(5);
    CHECK(is_dominating(p5, set_of(p5, {1, 3})));
    CHECK_FALSE(is_dominating(p5, set_of(p5, {0, 1})));
    Graph c3 = cycle_graph(3);
    CHECK(is_dominating(c3, set_of(c3, {0})));
    CHECK_THROWS_AS(is_dominating(p5, VertexSet(4)), GraphError);
}

TEST_CASE("defenders") {
    Graph p5 = path_graph(5);
    CHECK(defenders(p5, set_of(p5, {1, 3}), 2).empty());
    CHECK(defenders(p5, set_of(p5, {1, 3}), 0) == std::vector<VertexId>{1});
    Graph c3 = cycle_graph(3);
    CHECK(defenders(c3, set_of(c3, {0}), 1) == std::vector<VertexId>{0});
    CHECK_THROWS_AS(defenders(p5, set_of(p5, {1, 3}), 1), GraphError);
    CHECK_THROWS_AS(defenders(p5, VertexSet(6), 1), GraphError);
}

TEST_CASE("is_secure_dominating") {
    Graph p5 = path_graph(5);
    CHECK_FALSE(is_secure_dominating(p5, set_of(p5, {1, 3})));
    Graph p7 = path_graph(7);
    CHECK(is_secure_dominating(p7, set_of(p7, {1, 3, 5})));
    Graph c3 = cycle_graph(3);
    CHECK(is_secure_dominating(c3, set_of(c3, {0})));
}

TEST_CASE("property: swap modes and the brute-force oracle agree on random sets") {
    std::mt19937_64 rng(31);
    for (const auto& g : corpus(1, 120)) {
        for (int trial = 0; trial < 20; ++trial) {
            VertexSet d(g.n());
            for (VertexId v = 0; v < g.n(); ++v)
                if (rng() % 2) d.insert(v);
            const bool dom = is_dominating(g, d);
            CHECK(dom == oracle::dominates(g, flags(d)));
            const bool sec = is_secure_dominating(g, d, SwapCheck::Incremental);
            CHECK(sec == is_secure_dominating(g, d, SwapCheck::Full));
            CHECK(sec == oracle::secure(g, flags(d)));
            if (sec) CHECK(dom);
            for (VertexId u = 0; u < g.n(); ++u) {
                if (d.contains(u)) continue;
                auto inc = defenders(g, d, u, SwapCheck::Incremental);
                CHECK(inc == defenders(g, d, u, SwapCheck::Full));
                for (auto v : inc) {
                    CHECK(g.has_edge(u, v));
                    VertexSet swapped = d;
                    swapped.erase(v);
                    swapped.insert(u);
                    CHECK(is_dominating(g, swapped));
                }
            }
        }
    }
}

TEST_CASE("gamma_exact small cases") {
    CHECK(gamma_exact(complete_graph(4)).value == 1u);
    CHECK(gamma_exact(path_graph(4)).value == 2u);
    CHECK(gamma_exact(cycle_graph(6)).value == 2u);
    CHECK(oracle::gamma(path_graph(4)).value == 2);
    CHECK(oracle::gamma(cycle_graph(6)).value == 2);
}

TEST_CASE("gamma_s_exact small cases") {
    CHECK(gamma_s_exact(path_graph(7)).value == 3u);
    CHECK(gamma_s_exact(path_graph(5)).value == 3u);
    CHECK(gamma_s_exact(path_graph(5), {}, naive()).value == 3u);
    CHECK(oracle::gamma_s(path_graph(5)).value == 3);
    CHECK(gamma_s_exact(cycle_graph(3)).value == 1u);
}

TEST_CASE("halved Fig-2 graph has secure domination number 7") {
    const Graph halved = subdivide(wheel_graph(6), 2).derived();
    auto res = gamma_s_exact(halved);
    REQUIRE(res.exact());
    CHECK(*res.value == 7);
    CHECK(is_secure_dominating(halved, *res.witness));
}

TEST_CASE("empty and edgeless graphs") {
    auto empty = gamma_s_exact(make_graph(0, {}));
    CHECK(empty.value == 0u);
    for (std::size_t n = 1; n <= 6; ++n) {
        Graph g = make_graph(n, {});
        CHECK(gamma_exact(g).value == n);
        CHECK(gamma_s_exact(g).value == n);
        CHECK(gamma_s_exact(g, {}, naive()).value == n);
    }
}

TEST_CASE("path formula") {
    CHECK(path_secure_formula(7) == 3);
    CHECK(path_secure_formula(1) == 1);
    CHECK(path_secure_formula(21) == 9);
    CHECK_THROWS(path_secure_formula(0));
    for (std::size_t n = 1; n <= 18; ++n) CHECK(gamma_s_exact(path_graph(n)).value == path_secure_formula(n));
}

TEST_CASE("property: solvers match the subset oracle, including the witness") {
    for (const auto& g : corpus(2, 60)) {
        CAPTURE(g.n());
        const auto dom = oracle::gamma(g);
        const auto sec = oracle::gamma_s(g);
        for (auto mode : {SearchMode::Pruned, SearchMode::Naive}) {
            const SolverOptions opts{mode, 1};
            auto gd = gamma_exact(g, {}, opts);
            auto gs = gamma_s_exact(g, {}, opts);
            REQUIRE(gd.exact());
            REQUIRE(gs.exact());
            CHECK(*gd.value == dom.value);
            CHECK(gd.witness->members() == dom.witness);
            CHECK(*gs.value == sec.value);
            CHECK(gs.witness->members() == sec.witness);
            CHECK(is_dominating(g, *gd.witness));
            CHECK(is_secure_dominating(g, *gs.witness));
            CHECK(*gd.value <= *gs.value);
        }
    }
}

TEST_CASE("property: pruned and naive agree on every connected graph up to 6 vertices and their halves") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& base : enumerate_connected(n))
            for (std::size_t k : {1, 2}) {
                const Graph g = subdivide(base, k).derived();
                if (g.n() > 12) continue;
                auto pruned = gamma_s_exact(g);
                auto plain = gamma_s_exact(g, {}, naive());
                CHECK(pruned.value == plain.value);
                CHECK(pruned.witness == plain.witness);
            }
}

TEST_CASE("property: any secure dominating set bounds the optimum") {
    std::mt19937_64 rng(3);
    for (const auto& g : corpus(4, 60)) {
        const std::size_t best = *gamma_s_exact(g).value;
        for (int trial = 0; trial < 10; ++trial) {
            VertexSet s(g.n());
            for (VertexId v = 0; v < g.n(); ++v)
                if (rng() % 3) s.insert(v);
            if (is_secure_dominating(g, s)) CHECK(best <= s.size());
        }
    }
}

TEST_CASE("witness does not depend on the worker count") {
    std::mt19937_64 rng(8);
    std::vector<Graph> graphs{subdivide(wheel_graph(6), 2).derived(), path_graph(18), cycle_graph(13)};
    for (int i = 0; i < 10; ++i) graphs.push_back(random_graph(14, 0.25, rng()));
    for (const auto& g : graphs) {
        auto one = gamma_s_exact(g, {}, {SearchMode::Pruned, 1});
        for (std::size_t threads : {2, 3, 8}) {
            auto many = gamma_s_exact(g, {}, {SearchMode::Pruned, threads});
            CHECK(many.value == one.value);
            CHECK(many.witness == one.witness);
        }
    }
}

TEST_CASE("budget exhaustion gives skipped, never a value") {
    SolverBudget small_cap;
    small_cap.max_vertices = 5;
    auto r = gamma_s_exact(path_graph(6), small_cap);
    CHECK(r.status == SolveStatus::Skipped);
    CHECK_FALSE(r.value);
    CHECK_FALSE(r.witness);
    CHECK(r.detail.find("6 vertices") != std::string::npos);

    SolverBudget few_nodes;
    few_nodes.max_nodes = 1;
    auto q = gamma_s_exact(cycle_graph(20), few_nodes);
    CHECK(q.status == SolveStatus::Skipped);
    CHECK_FALSE(q.value);
    CHECK(q.detail.find("node budget") != std::string::npos);

    SolverBudget bad;
    bad.max_vertices = 65;
    CHECK_THROWS_AS(gamma_exact(path_graph(3), bad), std::invalid_argument);
    bad.max_vertices = 10;
    bad.time_ms = 0;
    CHECK_THROWS_AS(gamma_exact(path_graph(3), bad), std::invalid_argument);
}
