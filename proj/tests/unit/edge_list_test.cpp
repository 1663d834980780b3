#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "monopolies/edge_list.hpp"
#include "monopolies/families.hpp"

using namespace monopolies;

TEST_CASE("emit and parse round trip") {
    const Graph g = generate(parse_family_spec("wheel:6"));
    const std::string text = emit_edge_list(g);
    const Graph back = parse_edge_list(text);
    CHECK(back.order() == g.order());
    CHECK(back.size() == g.size());
    CHECK(back.edges() == g.edges());
    CHECK(emit_edge_list(back) == text);
}

TEST_CASE("emitted form is the header plus sorted edge lines") {
    const Graph p3 = generate(parse_family_spec("path:3"));
    CHECK(emit_edge_list(p3) == "3 2\n0 1\n1 2\n");
    const Graph k1 = Graph::from_edges(1, {});
    CHECK(emit_edge_list(k1) == "1 0\n");
}

TEST_CASE("parser tolerates loose whitespace") {
    const Graph a = parse_edge_list("  3 2 \n 0   1\n1 2\n");
    CHECK(a.order() == 3);
    CHECK(a.size() == 2);

    // leading blank lines before the header, trailing blank lines after edges
    const Graph b = parse_edge_list("\n   \n3 2\n0 1\n1 2\n\n  \n");
    CHECK(b.size() == 2);

    // no final newline
    CHECK(parse_edge_list("2 1\n0 1").size() == 1);

    // Windows line endings
    const Graph c = parse_edge_list("3 2\r\n0 1\r\n1 2\r\n");
    CHECK(c.size() == 2);
}

TEST_CASE("stream overload reads until the declared edges end") {
    std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
    const Graph g = parse_edge_list(in);
    CHECK(g.order() == 4);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("parse errors carry the offending line number") {
    CHECK_THROWS_WITH(parse_edge_list(""), "line 1: missing header");
    CHECK_THROWS_WITH(parse_edge_list("\n \n"), "line 1: missing header");
    CHECK_THROWS_WITH(parse_edge_list("3\n"), "line 1: expected header \"n m\"");
    CHECK_THROWS_WITH(parse_edge_list("3 2 9\n"), "line 1: expected header \"n m\"");
    CHECK_THROWS_WITH(parse_edge_list("x y\n"), "line 1: expected header \"n m\"");
    CHECK_THROWS_WITH(parse_edge_list("0 0\n"), "line 1: graph order must be at least 1");
    CHECK_THROWS_WITH(parse_edge_list("3 -1\n"), "line 1: edge count must be non-negative");
    CHECK_THROWS_WITH(parse_edge_list("2000000 1\n0 1\n"),
                      "line 1: header values out of supported range");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 1\n"),
                      "line 3: unexpected end of input, expected an edge");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 1\n\n1 2\n"),
                      "line 3: blank line where an edge was expected");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 1\nfoo\n"), "line 3: expected edge \"u v\"");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 1 1\n1 2\n"), "line 2: expected edge \"u v\"");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 3\n1 2\n"),
                      "line 2: vertex out of range [0, 2]");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 -1\n1 2\n"),
                      "line 2: vertex out of range [0, 2]");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n1 1\n1 2\n"), "line 2: self loop at vertex 1");
    CHECK_THROWS_WITH(parse_edge_list("3 1\n0 1\n1 2\n"),
                      "line 3: trailing content after the declared edges");

    // the header may leave the blank-line skipper on a later line
    CHECK_THROWS_WITH(parse_edge_list("\n\n3 2\n0 1\n"),
                      "line 5: unexpected end of input, expected an edge");
}

TEST_CASE("duplicate edges are rejected when the graph is assembled") {
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 1\n0 1\n"),
                      "edge list invalid: duplicate edge 0 1");
    CHECK_THROWS_WITH(parse_edge_list("3 2\n0 1\n1 0\n"),
                      "edge list invalid: duplicate edge 1 0");
}
