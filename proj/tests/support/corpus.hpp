#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "monopolies/graph.hpp"

namespace testsupport {

// Adjacency-bitmask graph on at most 8 vertices, the unit the exhaustive
// corpus is built from.
struct SmallGraph {
    int n = 0;
    std::array<uint8_t, 8> adj{};

    bool edge(int u, int v) const { return adj[u] >> v & 1; }
    void add_edge(int u, int v) {
        adj[u] = static_cast<uint8_t>(adj[u] | 1u << v);
        adj[v] = static_cast<uint8_t>(adj[v] | 1u << u);
    }
    int degree(int v) const { return std::popcount(adj[v]); }
    int edge_count() const;
    bool connected() const;
    std::vector<std::pair<int, int>> edge_pairs() const;
};

// One representative per isomorphism class of connected graphs, grouped by
// order: result[n] holds the n-vertex classes for n = 1..8. Built once per
// process by vertex augmentation with canonical-form deduplication; the
// class counts are checked against the known sequence
// 1, 1, 2, 6, 21, 112, 853, 11117 and a mismatch aborts via logic_error.
const std::vector<std::vector<SmallGraph>>& connected_classes();

// Smallest upper-triangle encoding over all degree-respecting relabelings.
// Equal exactly for isomorphic graphs of the same order.
uint32_t canonical_code(const SmallGraph& g);

monopolies::Graph to_graph(const SmallGraph& sg);

// Random spanning tree plus each remaining pair independently with
// probability extra. Always connected; deterministic for a given rng state.
monopolies::Graph random_connected_graph(std::mt19937& rng, int n, double extra);

} // namespace testsupport
