#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "monopolies/graph.hpp"

using namespace testsupport;

TEST_CASE("connected class counts match the known sequence") {
    const auto& classes = connected_classes();
    REQUIRE(classes.size() == 9);
    const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) CHECK(classes[n].size() == expected[n]);
}

TEST_CASE("every representative is connected and codes are distinct") {
    const auto& classes = connected_classes();
    for (int n = 1; n <= 6; ++n) {
        std::set<uint32_t> codes;
        for (const SmallGraph& sg : classes[n]) {
            CHECK(sg.n == n);
            CHECK(sg.connected());
            codes.insert(canonical_code(sg));
        }
        CHECK(codes.size() == classes[n].size());
    }
}

TEST_CASE("canonical code identifies isomorphic relabelings") {
    // the 4-path 0-1-2-3 and the same path written 2-0-3-1
    SmallGraph a;
    a.n = 4;
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    a.add_edge(2, 3);
    SmallGraph b;
    b.n = 4;
    b.add_edge(2, 0);
    b.add_edge(0, 3);
    b.add_edge(3, 1);
    CHECK(canonical_code(a) == canonical_code(b));

    // the star K_{1,3} is not the path
    SmallGraph c;
    c.n = 4;
    c.add_edge(0, 1);
    c.add_edge(0, 2);
    c.add_edge(0, 3);
    CHECK(canonical_code(a) != canonical_code(c));
}

TEST_CASE("conversion preserves the adjacency") {
    const auto& classes = connected_classes();
    for (const SmallGraph& sg : classes[5]) {
        const monopolies::Graph g = to_graph(sg);
        REQUIRE(g.order() == 5);
        CHECK(g.size() == sg.edge_count());
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) CHECK(g.adjacent(u, v) == sg.edge(u, v));
    }
}

TEST_CASE("random generator is connected and seed-deterministic") {
    std::mt19937 rng1(12345);
    std::mt19937 rng2(12345);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + trial % 9;
        const monopolies::Graph g1 = random_connected_graph(rng1, n, 0.3);
        const monopolies::Graph g2 = random_connected_graph(rng2, n, 0.3);
        CHECK(monopolies::is_connected(g1));
        CHECK(g1.order() == n);
        CHECK(g1.edges() == g2.edges());
        CHECK(g1.size() >= n - 1);
    }
}
