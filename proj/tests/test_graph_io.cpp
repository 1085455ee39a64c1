#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "subsec/generators.hpp"
#include "subsec/graph_io.hpp"

using namespace subsec;

TEST_CASE("graph6 decodes a single edge") {
    // 'A' = 63 + 2 vertices, '_' = 63 + 0b100000: bit (0,1) set.
    Graph g = parse_graph6("A_");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(emit_graph6(g) == "A_");
}

TEST_CASE("graph6 header and whitespace are tolerated") {
    CHECK(parse_graph6(">>graph6<<A_") == parse_graph6("A_"));
    CHECK(parse_graph6("A_\r\n") == parse_graph6("A_"));
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("   "), ParseError);
    CHECK_THROWS_AS(parse_graph6("D"), ParseError);        // 5 vertices need 2 body bytes
    CHECK_THROWS_AS(parse_graph6("A__"), ParseError);      // one byte too many
    CHECK_THROWS_AS(parse_graph6("A "), ParseError);       // trailing blank trimmed, body missing
    CHECK_THROWS_AS(parse_graph6("C\x7f"), ParseError);    // byte above 126
    CHECK_THROWS_AS(parse_graph6("~?"), ParseError);       // truncated long header
}

TEST_CASE("graph6 long header") {
    Graph p = path_graph(70);
    const std::string s = emit_graph6(p);
    CHECK(s.substr(0, 4) == "~?@E");  // 70 = 000000 000001 000110
    CHECK(parse_graph6(s) == p);
}

TEST_CASE("graph6 matches an independent encoder on the bundled corpus") {
    // corpus/atlas_n1-6.g6 was written by networkx.to_graph6_bytes for every
    // graph on 1..6 vertices.
    std::ifstream in(SUBSEC_CORPUS_DIR "/atlas_n1-6.g6");
    REQUIRE(in);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        ++lines;
        Graph g = parse_graph6(line);
        CHECK(emit_graph6(g) == line);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    CHECK(lines == 208);
}

TEST_CASE("property: graph6 round trip on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 90;
        Graph g = random_graph(n, 0.1 + static_cast<double>(rng() % 80) / 100.0, rng());
        CHECK(parse_graph6(emit_graph6(g)) == g);
        CHECK(parse_edge_list(emit_edge_list(g)) == g);
    }
}

TEST_CASE("edge list format") {
    Graph g = parse_edge_list("# triangle\np 3\ne 0 1\ne 1 2\n\ne 2 0\n");
    CHECK(g.m() == 3);
    CHECK(emit_edge_list(g) == "p 3\ne 0 1\ne 0 2\ne 1 2\n");

    auto line_of = [](std::string_view text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("p 3\ne 0 3\n") == 2);
    CHECK(line_of("e 0 1\n") == 1);
    CHECK(line_of("p 2\ne 1 1\n") == 2);
    CHECK(line_of("p 2\nq 1\n") == 2);
    CHECK(line_of("p 2\ne 0 1 7\n") == 2);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
}

TEST_CASE("read_graphs reports the offending line") {
    std::istringstream in("A_\n\nBw\nA\n");
    try {
        read_graphs(in, GraphFormat::Graph6);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    std::istringstream ok(">>graph6<<\nA_\nBw\n");
    auto recs = read_graphs(ok, GraphFormat::Graph6);
    REQUIRE(recs.size() == 2);
    CHECK(recs[1].id == "Bw");
    CHECK(recs[1].line == 3);
}
