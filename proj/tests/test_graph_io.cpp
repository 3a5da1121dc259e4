#include "oracles.hpp"
#include "unidom/graph_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace unidom;

TEST_SUITE_BEGIN("graph_io");

TEST_CASE("graph6 hand-encoded values") {
    // n = 3 -> 'B'; three pair bits padded to six -> '?' when all zero.
    CHECK(emit_graph6(Graph::edgeless(3)) == "B?");
    // '_' = 63 + 0b100000: only the (0,1) bit.
    const Graph b_ = parse_graph6("B_");
    CHECK(b_.order() == 3);
    CHECK(b_.edges() == std::vector<Edge>{{0, 1}});
    // 'w' = 63 + 0b111000: the triangle.
    CHECK(parse_graph6("Bw") == oracle::complete(3));
    CHECK(emit_graph6(Graph::edgeless(0)) == "?");
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 matches the reference encoder on every graph with n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
            const Graph g = oracle::graph_from_pair_mask(n, m);
            const std::string code = emit_graph6(g);
            REQUIRE(code == oracle::reference_graph6(g));
            REQUIRE(parse_graph6(code) == g);
        }
    }
}

TEST_CASE("graph6 round trip, exhaustive n <= 7 and random n <= 12") {
    for (int n = 6; n <= 7; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
            const Graph g = oracle::graph_from_pair_mask(n, m);
            REQUIRE(parse_graph6(emit_graph6(g)) == g);
        }
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const Graph g = oracle::random_graph(rng, 1 + t % 12, 0.5);
        const std::string code = emit_graph6(g);
        CHECK(code == oracle::reference_graph6(g));
        CHECK(parse_graph6(code) == g);
        CHECK(emit_graph6(parse_graph6(code)) == code);
    }
}

TEST_CASE("graph6 long-form header for 63 and 64 vertices") {
    for (int n : {62, 63, 64}) {
        std::vector<Edge> e;
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        const Graph g = Graph::from_edge_list(n, e);
        const std::string code = emit_graph6(g);
        CHECK(code == oracle::reference_graph6(g));
        CHECK((n <= 62 ? code[0] != '~' : code[0] == '~'));
        CHECK(parse_graph6(code) == g);
    }
}

TEST_CASE("graph6 parse errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);         // truncated payload
    CHECK_THROWS_AS(parse_graph6("B??"), ParseError);       // payload too long
    CHECK_THROWS_AS(parse_graph6("B@"), ParseError);        // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~?"), ParseError);        // truncated long header
    CHECK_THROWS_AS(parse_graph6("~??~"), ParseError);      // n = 63 but no payload
    CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError);     // unprintable byte
    CHECK_THROWS_AS(parse_graph6("~?@?"), ParseError);      // n = 64*64 over the cap
    CHECK(parse_graph6(">>graph6<<B_\n").size() == 1);
}

TEST_CASE("edge list") {
    const Graph g = oracle::extremal_10_3();
    const std::string text = emit_edge_list(g);
    CHECK(text.substr(0, 6) == "10 15\n");
    CHECK(parse_edge_list(text) == g);
    CHECK(parse_edge_list("# comment\n3 2\n0 1\n\n1 2\n") == oracle::path(3));
    CHECK(parse_edge_list("4 0\n") == Graph::edgeless(4));

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);   // count mismatch
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);   // out of range
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);   // loop
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
}

TEST_CASE("format detection and file reading") {
    CHECK(detect_format("B_") == GraphFormat::graph6);
    CHECK(detect_format("3 2\n0 1\n1 2\n") == GraphFormat::edge_list);
    CHECK(detect_format("# header\n3 0\n") == GraphFormat::edge_list);

    const std::string path = "unidom_graph_io_test.g6";
    {
        std::ofstream f(path);
        f << "B_\n\nBw\n";
    }
    const auto graphs = read_graph_file(path);
    CHECK(graphs.size() == 2);
    CHECK(graphs[1] == oracle::complete(3));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_graph_file("/nonexistent/unidom.g6"), std::runtime_error);
}

TEST_CASE("DOT output") {
    const std::string dot = emit_dot(oracle::path(3), {"x1 (D)", "a1 (A)", "b1 (B)"});
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 [label=\"x1 (D)\"];") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK_THROWS_AS(emit_dot(oracle::path(3), {"only one"}), std::invalid_argument);
}

TEST_SUITE_END();
