#pragma once

#include <string>
#include <vector>

#include "monopolies/graph.hpp"

namespace monopolies {

enum class Family {
    path,               // P_n, n >= 2, vertices 0..n-1 in path order
    cycle,              // C_n, n >= 3, vertices consecutive around the cycle
    complete,           // K_n, n >= 2
    complete_bipartite, // K_{r,t}, sides 0..r-1 and r..r+t-1
    wheel,              // hub 0 joined to a cycle 1..n-1, n >= 4
    fan,                // hub 0 joined to a path 1..n-1, n >= 2
    hypercube,          // Q_d, vertex ids are the bit patterns, d >= 1
    family_f,           // clique 0..t-1 plus satellites t..2t-1, t = 1 (mod 4), t >= 5
};

struct FamilySpec {
    Family family;
    std::vector<int> params;

    std::string to_string() const;   // "cycle:8", "complete_bipartite:3,4"
};

// Parses "name:p1[,p2]". Throws std::invalid_argument on unknown names,
// malformed parameter lists, or parameters outside the family's domain.
FamilySpec parse_family_spec(const std::string& text);

// Builds the canonical representative described per Family above. Every
// generated graph is connected with minimum degree >= 1.
Graph generate(const FamilySpec& spec);

const char* family_name(Family f);

} // namespace monopolies
