#pragma once

#include <vector>

#include "monopolies/graph.hpp"

namespace monopolies {

struct PartitionResult {
    enum class Status {
        found,           // parts holds a partition into r open k-monopolies
        none_exists,     // exhaustive search ruled it out
        bound_excluded,  // k > 0 or r > 2 - 2k, so no search was attempted
    };
    Status status;
    int k;
    int r;
    std::vector<VertexSet> parts;   // empty unless status == found
};

// Searches for a partition of V into exactly r nonempty parts, each of which
// is an open k-monopoly of g. Such a partition forces k <= 0 and r <= 2 - 2k,
// so those cases are rejected up front; pass enforce_bound = false to search
// anyway (used to confirm the exclusion empirically). The search enumerates
// assignments in restricted-growth order, so a found partition is canonical:
// vertex 0 lands in part 0 and parts open in first-vertex order.
//
// Throws std::invalid_argument when r < 2 and std::out_of_range when k is
// outside valid_k_range(g).
PartitionResult find_monopoly_partition(const Graph& g, int k, int r,
                                        bool enforce_bound = true);

// Facts that hold for any partition {x, y} into two open 0-monopolies.
struct TwoPartReport {
    bool split_degrees_equal;   // every v sees as many neighbors in x as in y
    bool all_degrees_even;
    long long edges_in_x;
    long long edges_in_y;
    bool induced_sizes_equal;
    long long cut;
    bool cut_identity;          // cut == m - 2 * edges_in_x
};

// Validates that {x, y} partitions V and that both sides are open
// 0-monopolies (std::invalid_argument names the first offending vertex
// otherwise), then measures the four structural properties above.
TwoPartReport check_two_part_properties(const Graph& g, const VertexSet& x,
                                        const VertexSet& y);

} // namespace monopolies
