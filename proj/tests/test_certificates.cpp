#include <doctest.h>

#include "oracle.hpp"
#include "subsec/certificates.hpp"
#include "subsec/generators.hpp"

using namespace subsec;

namespace {

std::vector<bool> flags(const VertexSet& s) {
    std::vector<bool> in(s.universe());
    for (auto v : s.members()) in[v] = true;
    return in;
}

// Certificate invariants that must hold for every construction.
void check_certificate(const Certificate& c, const SubdivisionMap& map) {
    CHECK(c.set.universe() == map.derived().n());
    CHECK(c.set.size() == c.claimed_size);
    CHECK(c.validated == oracle::secure(map.derived(), flags(c.set)));
    if (c.validated) {
        auto best = gamma_s_exact(map.derived());
        REQUIRE(best.exact());
        CHECK(*best.value <= c.claimed_size);
    }
}

}  // namespace

TEST_CASE("cert_half") {
    auto p4 = subdivide(path_graph(4), 2);
    auto [internal, original] = cert_half(p4);
    CHECK(internal.set.size() == 3);
    CHECK(internal.validated);
    for (auto id : internal.set.members()) CHECK(std::holds_alternative<Internal>(p4.label(id)));
    check_certificate(internal, p4);
    check_certificate(original, p4);

    auto c3 = subdivide(cycle_graph(3), 2);
    auto [tri, tri_orig] = cert_half(c3);
    CHECK(tri.set.size() == 3);
    CHECK(tri.validated);
    check_certificate(tri_orig, c3);

    auto wheel = subdivide(wheel_graph(6), 2);
    auto [w_int, w_orig] = cert_half(wheel);
    CHECK(w_orig.set.size() == 7);
    CHECK(w_orig.validated);
    check_certificate(w_int, wheel);

    CHECK_THROWS_AS(cert_half(subdivide(star_graph(4), 2)), GraphError);
    CHECK_THROWS_AS(cert_half(subdivide(make_graph(3, {}), 2)), GraphError);
    CHECK_THROWS_AS(cert_half(subdivide(path_graph(4), 3)), GraphError);
}

TEST_CASE("cert_star") {
    auto s4 = subdivide(star_graph(4), 3);
    auto c = cert_star(s4);
    CHECK(c.set.size() == 4);
    CHECK(c.validated);
    check_certificate(c, s4);

    auto s3 = subdivide(star_graph(3), 2);
    auto d = cert_star(s3);
    CHECK(d.set.size() == 3);
    CHECK(d.validated);
    check_certificate(d, s3);

    CHECK_THROWS_AS(cert_star(subdivide(star_graph(4), 4)), GraphError);
    CHECK_THROWS_AS(cert_star(subdivide(cycle_graph(4), 2)), GraphError);
}

TEST_CASE("cert_third") {
    auto p2 = subdivide(path_graph(2), 3);
    auto c = cert_third(p2);
    CHECK(c.set.members() == std::vector<VertexId>{2, 3});
    CHECK(c.validated);

    auto c3 = subdivide(cycle_graph(3), 3);
    auto t = cert_third(c3);
    CHECK(t.set.size() == 6);
    CHECK(t.validated);
    check_certificate(t, c3);

    auto empty = cert_third(subdivide(make_graph(3, {}), 3));
    CHECK(empty.set.empty());
    CHECK_FALSE(empty.validated);
}

TEST_CASE("cert_quarter") {
    auto p3 = subdivide(path_graph(3), 4);
    auto c = cert_quarter(p3);
    CHECK(c.set.size() == 4);
    CHECK(c.validated);
    check_certificate(c, p3);

    auto c3 = subdivide(cycle_graph(3), 4);
    CHECK(cert_quarter(c3).validated);
    CHECK(cert_quarter(c3).set.size() == 6);

    // The construction fails on a single edge; P_5 has no secure dominating pair.
    auto p2 = subdivide(path_graph(2), 4);
    auto bad = cert_quarter(p2);
    CHECK(bad.set.size() == 2);
    CHECK_FALSE(bad.validated);
    check_certificate(bad, p2);
}

TEST_CASE("cert_fifth") {
    auto p3 = subdivide(path_graph(3), 5);
    auto c = cert_fifth(p3);
    CHECK(c.claimed_size == 5);
    CHECK(c.validated);
    check_certificate(c, p3);
    CHECK(c.set.contains(1));  // the middle vertex has maximum degree

    auto s4 = subdivide(star_graph(4), 5);
    auto s = cert_fifth(s4);
    CHECK(s.claimed_size == 7);
    CHECK(s.validated);
    check_certificate(s, s4);

    auto p2 = subdivide(path_graph(2), 5);
    auto e = cert_fifth(p2);
    CHECK(e.claimed_size == 3);
    CHECK(e.validated);
    check_certificate(e, p2);

    CHECK_THROWS_AS(cert_fifth(subdivide(make_graph(2, {}), 5)), GraphError);
}

TEST_CASE("decompose") {
    auto six = decompose(6);
    CHECK(six.k == 1);
    CHECK(six.r == -1);
    auto thirteen = decompose(13);
    CHECK(thirteen.k == 2);
    CHECK(thirteen.r == -1);
    CHECK(decompose(9).residue_024());
    CHECK(decompose(7).residue_024());
    CHECK(decompose(11).residue_024());
    CHECK_THROWS(decompose(5));
    for (std::size_t n = 6; n <= 200; ++n) {
        auto d = decompose(n);
        if (d.residue_024()) continue;
        CHECK(d.k >= 1);
        CHECK(static_cast<long>(7 * d.k) + *d.r == static_cast<long>(n));
    }
}

TEST_CASE("cert_general on a single edge reproduces the optimal path pattern") {
    auto six = cert_general(subdivide(path_graph(2), 6));
    CHECK(six.set.members() == std::vector<VertexId>{2, 4, 6});  // x_1, x_3, x_5
    auto eight = subdivide(path_graph(2), 8);
    CHECK(general_positions(decompose(8)) == std::vector<std::size_t>{1, 3, 5, 7});
    CHECK(general_positions(decompose(10)) == std::vector<std::size_t>{1, 3, 5, 7, 9});
    CHECK(general_positions(decompose(12)) == std::vector<std::size_t>{1, 3, 5, 7, 9, 11});
    CHECK(general_positions(decompose(13)) == std::vector<std::size_t>{1, 3, 5, 8, 10, 12});
    for (std::size_t n : {6, 8, 10, 12, 13}) {
        CAPTURE(n);
        auto map = subdivide(path_graph(2), n);
        auto c = cert_general(map);
        CHECK(c.validated);
        CHECK(c.claimed_size == path_secure_formula(n + 1));
        CHECK(c.claimed_size == *gamma_s_exact(map.derived()).value);
        check_certificate(c, map);
    }
    CHECK_THROWS(cert_general(subdivide(path_graph(2), 9)));
}

TEST_CASE("property: size law across a corpus") {
    const std::vector<Graph> bases{path_graph(2), path_graph(3), path_graph(4), cycle_graph(3), cycle_graph(4),
                                   star_graph(4), complete_graph(4)};
    for (const auto& g : bases) {
        CHECK(cert_third(subdivide(g, 3)).set.size() == 2 * g.m());
        CHECK(cert_quarter(subdivide(g, 4)).set.size() == 2 * g.m());
        CHECK(cert_fifth(subdivide(g, 5)).set.size() == 3 * g.m() - max_degree(g) + 1);
        for (std::size_t n : {6, 8, 10, 12, 13, 20})
            CHECK(cert_general(subdivide(g, n)).set.size() == path_secure_formula(n + 1) * g.m());
        auto again = cert_fifth(subdivide(g, 5));
        CHECK(again.set == cert_fifth(subdivide(g, 5)).set);
    }
}
