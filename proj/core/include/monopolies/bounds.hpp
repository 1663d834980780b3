#pragma once

#include <string>
#include <vector>

#include "monopolies/families.hpp"
#include "monopolies/graph.hpp"

namespace monopolies {

struct BoundRecord {
    enum class Side { lower, upper, exact };
    std::string name;
    Side side;
    long long value;
    std::string applicability;   // short note on when the bound is valid

    static const char* side_name(Side s);
};

struct GeneralBounds {
    long long lower;   // ceil((max_degree + 2k + 2) / 2)
    long long upper;   // n - floor((min_degree - 2k) / 2)
};

// Degree-based sandwich for the minimum open k-monopoly size. k must lie in
// valid_k_range(g).
GeneralBounds general_bounds(const Graph& g, int k);

// Order/size lower bound ceil((3kn - m) / 2k), valid for k >= 1 only; k == 0
// and k < 0 are rejected. For negative k see size_lower_bound_experimental.
long long size_lower_bound(const Graph& g, int k);

// The same expression evaluated at k <= -1. Not a proven bound; offered for
// exploratory comparison only, never asserted anywhere in this library.
long long size_lower_bound_experimental(const Graph& g, int k);

// ceil(n(2k + r) / 2r) for r-regular graphs; rejects irregular graphs, k must
// lie in valid_k_range(g).
long long regular_lower_bound(const Graph& g, int k);

// Closed-form minimum open k-monopoly sizes:
//   complete n            any valid k     ceil((n + 2k + 1) / 2)
//   complete_bipartite r,t any valid k    ceil((r + 2k)/2) + ceil((t + 2k)/2)
//   cycle n / path n      k = 0           n/2, (n+2)/2, (n+1)/2 by n mod 4
//   wheel n / fan n       k = 1           n
// Unsupported family/k combinations throw std::invalid_argument.
long long exact_formula(const FamilySpec& spec, int k);

// True exactly when k = 0 or k = 1 admits a 2-vertex open k-monopoly, which
// happens only for the path on 2, 3 or 4 vertices and the cycle on 3 or 4.
// At these orders degree multiset + edge count + connectivity pin the graph.
// The restriction to nonnegative k matters: negative k reaches two on denser
// graphs as well, K_4 at k = -1 being the smallest example.
bool is_monopoly_number_two(const Graph& g);

// True exactly when the whole vertex set is the unique open k-monopoly:
// k = floor(min_degree / 2) and every vertex has a neighbor of degree
// min_degree (min_degree odd) or of degree min_degree/min_degree+1 (even).
bool is_monopoly_number_n(const Graph& g, int k);

} // namespace monopolies
