#pragma once

#include <optional>

#include "monopolies/graph.hpp"

namespace monopolies {

// Function V -> {+1, -1} stored as the +1 side; the -1 side is the
// complement. weight() = sum over all vertices = 2|B1| - n.
class SignedAssignment {
public:
    explicit SignedAssignment(VertexSet b1) : b1_(std::move(b1)) {}
    // Validates that b1 and b_minus1 partition the universe.
    SignedAssignment(const VertexSet& b1, const VertexSet& b_minus1);

    const VertexSet& b1() const { return b1_; }
    VertexSet b_minus1() const { return b1_.complement(); }
    int universe_size() const { return b1_.universe_size(); }
    int value(int v) const { return b1_.contains(v) ? 1 : -1; }
    long long weight() const { return 2LL * b1_.count() - b1_.universe_size(); }

    bool operator==(const SignedAssignment& other) const { return b1_ == other.b1_; }

private:
    VertexSet b1_;
};

// All predicates evaluate the literal arithmetic condition for any integer k;
// admissible ranges are the solvers' business. Comparisons against half
// degrees are kept in doubled-integer form (2*inside vs degree + 2k), so no
// rounding ever enters.

// v is k-controlled by M: |N(v) ∩ M| >= degree(v)/2 + k.
bool is_k_controlled(const Graph& g, int v, const VertexSet& m, int k);

// Nonempty M whose k-control reaches every vertex. Rejects empty M.
bool is_k_monopoly(const Graph& g, const VertexSet& m, int k);
std::optional<int> first_uncontrolled_vertex(const Graph& g, const VertexSet& m, int k);

// Every vertex (members included) has a neighbor in D. Rejects empty D.
bool is_total_dominating(const Graph& g, const VertexSet& d);
std::optional<int> first_not_totally_dominated(const Graph& g, const VertexSet& d);

// Every vertex outside D has a neighbor in D.
bool is_dominating(const Graph& g, const VertexSet& d);
std::optional<int> first_undominated(const Graph& g, const VertexSet& d);

// f(N(v)) >= k for every vertex (open neighborhood sum).
bool is_signed_total_k_dominating(const Graph& g, const SignedAssignment& f, int k);
std::optional<int> first_signed_total_violation(const Graph& g, const SignedAssignment& f, int k);

// f(N[v]) >= k for every vertex (closed neighborhood sum).
bool is_signed_k_dominating(const Graph& g, const SignedAssignment& f, int k);
std::optional<int> first_signed_violation(const Graph& g, const SignedAssignment& f, int k);

// Every member of S has at least k more neighbors inside S than outside.
// global additionally requires S to be dominating. Rejects empty S.
bool is_defensive_k_alliance(const Graph& g, const VertexSet& s, int k, bool global = false);
std::optional<int> first_defensive_violation(const Graph& g, const VertexSet& s, int k, bool global = false);

// Every vertex of the boundary of S has at least k more neighbors inside S
// than outside; vacuously true when the boundary is empty. Rejects empty S.
bool is_offensive_k_alliance(const Graph& g, const VertexSet& s, int k, bool global = false);
std::optional<int> first_offensive_violation(const Graph& g, const VertexSet& s, int k, bool global = false);

// Defensive k-alliance that is also an offensive (k+2)-alliance.
bool is_powerful_k_alliance(const Graph& g, const VertexSet& s, int k, bool global = false);
std::optional<int> first_powerful_violation(const Graph& g, const VertexSet& s, int k, bool global = false);

} // namespace monopolies
