#pragma once

#include <string>
#include <vector>

#include "monopolies/graph.hpp"
#include "monopolies/solver.hpp"

namespace monopolies {

// Where a vertex of the expanded graph H came from.
struct VertexOrigin {
    enum class Role { original, path_vertex };
    Role role;
    int g_vertex;     // owning vertex of G
    int path_index;   // which attached path of g_vertex (-1 for originals)
    int position;     // 1..5 along that path (-1 for originals)
};

struct ReductionOutput {
    Graph h;
    std::vector<VertexOrigin> origin_map;   // indexed by H vertex
    int added_vertices;
    int added_edges;
    int added_leaves;
};

// Expands G into H: every vertex v of G gets degree(v) - 1 disjoint 5-vertex
// paths, each hooked to v through its middle vertex. Path vertices are
// numbered after the originals, grouped by (owning vertex, path index) with
// positions 1..5 consecutive. Structural bookkeeping (vertex/edge/leaf
// counts, doubled-minus-one original degrees) is re-checked on every build.
// Requires G connected with no isolated vertex.
ReductionOutput build_reduction(const Graph& g);

// One line per H vertex: "h role g path position", with "-" for the unused
// fields of originals.
std::string format_origin_map(const ReductionOutput& r);

struct ReductionIdentity {
    enum class Status { verified, too_large };
    Status status;
    long long lhs;    // minimum open 0-monopoly size of H
    long long rhs;    // 6m - 3n + (minimum total dominating set size of G)
    bool equal;
};

// Checks the size identity behind the expansion. Never silently passes: when
// H exceeds the solver's order guard the result says so instead.
ReductionIdentity verify_reduction_identity(const Graph& g, const SolveOptions& opts = {});

} // namespace monopolies
