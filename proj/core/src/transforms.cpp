#include "monopolies/transforms.hpp"

namespace monopolies {

SignedAssignment monopoly_to_signed_total(const VertexSet& m) {
    return SignedAssignment(m);
}

VertexSet signed_total_to_monopoly(const Graph& g, const SignedAssignment& f, int level,
                                   bool strict) {
    if (level < 2 || level % 2 != 0)
        throw std::invalid_argument("level must be an even integer >= 2 (level = 2k)");
    if (strict) {
        if (auto v = first_signed_total_violation(g, f, level))
            throw verification_error("signed total " + std::to_string(level) + "-domination", *v);
    }
    return f.b1();
}

SignedAssignment powerful_to_signed(const Graph& g, const VertexSet& s, int k, bool strict) {
    if (strict) {
        if (auto v = first_defensive_violation(g, s, k, false))
            throw verification_error("defensive " + std::to_string(k) + "-alliance condition", *v);
        if (auto v = first_offensive_violation(g, s, k + 2, false))
            throw verification_error("offensive " + std::to_string(k + 2) + "-alliance condition", *v);
        if (auto v = first_undominated(g, s))
            throw verification_error("domination", *v);
    }
    return SignedAssignment(s);
}

VertexSet signed_to_powerful(const Graph& g, const SignedAssignment& f, int k, bool strict) {
    if (strict) {
        if (auto v = first_signed_violation(g, f, k + 1))
            throw verification_error("signed " + std::to_string(k + 1) + "-domination", *v);
    }
    return f.b1();
}

} // namespace monopolies
