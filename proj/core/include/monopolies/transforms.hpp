#pragma once

#include <stdexcept>
#include <string>

#include "monopolies/graph.hpp"
#include "monopolies/predicates.hpp"

namespace monopolies {

// Raised by the strict transforms when the input fails its defining
// condition; carries the first vertex where the condition breaks and which
// condition it was.
class verification_error : public std::runtime_error {
public:
    verification_error(std::string condition, int vertex)
        : std::runtime_error(condition + " fails at vertex " + std::to_string(vertex)),
          condition_(std::move(condition)), vertex_(vertex) {}

    const std::string& condition() const { return condition_; }
    int vertex() const { return vertex_; }

private:
    std::string condition_;
    int vertex_;
};

// M  ->  f = (B1 = M, B-1 = complement). Purely representational; a
// k-monopoly with k >= 1 lands on a signed total (2k)-dominating function.
SignedAssignment monopoly_to_signed_total(const VertexSet& m);

// f  ->  B1, for even level = 2k >= 2. In strict mode (the default) rejects
// assignments that are not signed total `level`-dominating, naming the first
// violating vertex.
VertexSet signed_total_to_monopoly(const Graph& g, const SignedAssignment& f, int level,
                                   bool strict = true);

// S  ->  f = (B1 = S, B-1 = complement). Strict mode requires S to be a
// global powerful k-alliance and reports which of the defining conditions
// (defensive k, offensive k+2, domination) fails first.
SignedAssignment powerful_to_signed(const Graph& g, const VertexSet& s, int k,
                                    bool strict = true);

// f  ->  B1. Strict mode requires f to be signed (k+1)-dominating.
VertexSet signed_to_powerful(const Graph& g, const SignedAssignment& f, int k,
                             bool strict = true);

} // namespace monopolies
