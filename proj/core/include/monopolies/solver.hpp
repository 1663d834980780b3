#pragma once

#include <vector>

#include "monopolies/bounds.hpp"
#include "monopolies/graph.hpp"

namespace monopolies {

enum class SolveStatus { optimal, infeasible };

struct SolveReport {
    // Minimum cardinality, except for the signed problems where it is the
    // minimum function weight 2|B1| - n.
    long long optimum = 0;
    // Optimal set (B1 for the signed problems), empty when infeasible.
    // Canonical: the lexicographically smallest sorted vertex list among all
    // optimal witnesses, independent of worker count.
    VertexSet witness;
    unsigned long long nodes_explored = 0;
    std::vector<BoundRecord> bounds_used;
    SolveStatus status = SolveStatus::optimal;
};

// Exact search refuses larger instances unless explicitly overridden.
inline constexpr int solver_order_guard = 64;

struct SolveOptions {
    int workers = 0;           // 0 = all hardware threads
    bool allow_large = false;  // lift the order guard
};

// Minimum open k-monopoly. Throws std::domain_error on isolated vertices and
// std::out_of_range when k is outside valid_k_range(g).
SolveReport min_k_monopoly(const Graph& g, int k, const SolveOptions& opts = {});

// Minimum total dominating set; infeasible when the graph has an isolated
// vertex.
SolveReport min_total_dominating(const Graph& g, const SolveOptions& opts = {});

// Minimum set that is simultaneously a global defensive k-alliance and a
// global offensive k-alliance. k is policed to {-max_degree..max_degree}.
SolveReport min_global_def_off_alliance(const Graph& g, int k, const SolveOptions& opts = {});

// Minimum weight of a signed total k-dominating function, k >= 1; infeasible
// when k exceeds the minimum degree.
SolveReport min_signed_total_k_dom(const Graph& g, int k, const SolveOptions& opts = {});

// Minimum global powerful k-alliance (defensive k and offensive k+2,
// dominating). k is policed to {-max_degree..max_degree}; infeasible when no
// such alliance exists.
SolveReport min_global_powerful_alliance(const Graph& g, int k, const SolveOptions& opts = {});

// Minimum weight of a signed k-dominating function (closed neighborhoods),
// k >= 1.
SolveReport min_signed_k_dom(const Graph& g, int k, const SolveOptions& opts = {});

} // namespace monopolies
