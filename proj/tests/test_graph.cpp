#include <doctest.h>

#include <sstream>

#include "qwmvc/errors.hpp"
#include "qwmvc/graph.hpp"
#include "qwmvc/graph_io.hpp"
#include "support/test_graphs.hpp"

using namespace qwmvc;
using namespace qwmvc::testing;

TEST_CASE("graph construction enforces simplicity") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);

    const Graph g(4, {{2, 0}, {0, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});  // canonicalized
    CHECK(g.edges()[1] == Edge{0, 2});
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(1, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.non_isolated_count() == 3);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete_graph(3)));
    CHECK(is_connected(empty_graph(0)));
    CHECK(is_connected(empty_graph(1)));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));  // two disjoint edges
    CHECK_FALSE(is_connected(empty_graph(3)));
}

TEST_CASE("qubit encoding widths and labels") {
    const auto enc8 = qubit_encoding(empty_graph(8));
    CHECK(enc8.qubit_count == 3);
    CHECK(enc8.labels[5] == "101");
    CHECK(enc8.labels[0] == "000");

    CHECK(qubit_encoding(empty_graph(9)).qubit_count == 4);

    const auto enc1 = qubit_encoding(empty_graph(1));
    CHECK(enc1.qubit_count == 0);
    CHECK(enc1.labels[0] == "");

    CHECK_THROWS_AS(qubit_encoding(empty_graph(0)), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    const Graph g = petersen_graph();
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    const Graph back = read_edge_list(in, "roundtrip");
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list parse errors carry line numbers") {
    SUBCASE("self-loop") {
        std::istringstream in("3 2\n0 1\n2 2\n");
        try {
            read_edge_list(in, "bad.el");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line_number == 3);
            CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
        }
    }
    SUBCASE("missing header") {
        std::istringstream in("# only a comment\n");
        CHECK_THROWS_AS(read_edge_list(in, "x"), parse_error);
    }
    SUBCASE("edge count mismatch") {
        std::istringstream in("3 2\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(in, "x"), parse_error);
    }
    SUBCASE("out of range vertex") {
        std::istringstream in("3 1\n0 7\n");
        try {
            read_edge_list(in, "x");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line_number == 2);
        }
    }
    SUBCASE("duplicate edge") {
        std::istringstream in("3 2\n0 1\n1 0\n");
        try {
            read_edge_list(in, "x");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line_number == 3);
        }
    }
    SUBCASE("comments and blank lines are fine") {
        std::istringstream in("# graph\n\n3 1\n# edge\n0 1\n");
        const Graph g = read_edge_list(in, "x");
        CHECK(g.edge_count() == 1);
    }
}
