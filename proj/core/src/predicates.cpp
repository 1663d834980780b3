#include "monopolies/predicates.hpp"

#include <stdexcept>

namespace monopolies {

namespace {

void check_binding(const Graph& g, const VertexSet& s, const char* what) {
    if (s.universe_size() != g.order())
        throw std::invalid_argument(std::string(what) + " not bound to this graph");
}

void check_nonempty(const VertexSet& s, const char* what) {
    if (s.empty())
        throw std::invalid_argument(std::string(what) + " must be nonempty");
}

} // namespace

SignedAssignment::SignedAssignment(const VertexSet& b1, const VertexSet& b_minus1) : b1_(b1) {
    if (b1.universe_size() != b_minus1.universe_size() || b1.intersects(b_minus1) ||
        b1.count() + b_minus1.count() != b1.universe_size())
        throw std::invalid_argument("b1 and b_minus1 must partition the vertex set");
}

bool is_k_controlled(const Graph& g, int v, const VertexSet& m, int k) {
    check_binding(g, m, "set");
    return 2LL * degree_in(g, v, m) >= static_cast<long long>(g.degree(v)) + 2LL * k;
}

std::optional<int> first_uncontrolled_vertex(const Graph& g, const VertexSet& m, int k) {
    check_binding(g, m, "set");
    check_nonempty(m, "monopoly candidate");
    for (int v = 0; v < g.order(); ++v)
        if (!is_k_controlled(g, v, m, k)) return v;
    return std::nullopt;
}

bool is_k_monopoly(const Graph& g, const VertexSet& m, int k) {
    return !first_uncontrolled_vertex(g, m, k).has_value();
}

std::optional<int> first_not_totally_dominated(const Graph& g, const VertexSet& d) {
    check_binding(g, d, "set");
    check_nonempty(d, "dominating candidate");
    for (int v = 0; v < g.order(); ++v)
        if (degree_in(g, v, d) < 1) return v;
    return std::nullopt;
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
    return !first_not_totally_dominated(g, d).has_value();
}

std::optional<int> first_undominated(const Graph& g, const VertexSet& d) {
    check_binding(g, d, "set");
    for (int v = 0; v < g.order(); ++v)
        if (!d.contains(v) && degree_in(g, v, d) < 1) return v;
    return std::nullopt;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    return !first_undominated(g, d).has_value();
}

std::optional<int> first_signed_total_violation(const Graph& g, const SignedAssignment& f, int k) {
    check_binding(g, f.b1(), "assignment");
    for (int v = 0; v < g.order(); ++v) {
        // f(N(v)) = inside - outside = 2*inside - degree
        long long sum = 2LL * degree_in(g, v, f.b1()) - g.degree(v);
        if (sum < k) return v;
    }
    return std::nullopt;
}

bool is_signed_total_k_dominating(const Graph& g, const SignedAssignment& f, int k) {
    return !first_signed_total_violation(g, f, k).has_value();
}

std::optional<int> first_signed_violation(const Graph& g, const SignedAssignment& f, int k) {
    check_binding(g, f.b1(), "assignment");
    for (int v = 0; v < g.order(); ++v) {
        long long sum = 2LL * degree_in(g, v, f.b1()) - g.degree(v) + f.value(v);
        if (sum < k) return v;
    }
    return std::nullopt;
}

bool is_signed_k_dominating(const Graph& g, const SignedAssignment& f, int k) {
    return !first_signed_violation(g, f, k).has_value();
}

std::optional<int> first_defensive_violation(const Graph& g, const VertexSet& s, int k, bool global) {
    check_binding(g, s, "set");
    check_nonempty(s, "alliance candidate");
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) {
            long long inside = degree_in(g, v, s);
            long long outside = g.degree(v) - inside;
            if (inside < outside + k) return v;
        } else if (global && degree_in(g, v, s) < 1) {
            return v;
        }
    }
    return std::nullopt;
}

bool is_defensive_k_alliance(const Graph& g, const VertexSet& s, int k, bool global) {
    return !first_defensive_violation(g, s, k, global).has_value();
}

std::optional<int> first_offensive_violation(const Graph& g, const VertexSet& s, int k, bool global) {
    check_binding(g, s, "set");
    check_nonempty(s, "alliance candidate");
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        long long inside = degree_in(g, v, s);
        if (inside >= 1) {
            // v lies on the boundary of S
            long long outside = g.degree(v) - inside;
            if (inside < outside + k) return v;
        } else if (global) {
            return v;
        }
    }
    return std::nullopt;
}

bool is_offensive_k_alliance(const Graph& g, const VertexSet& s, int k, bool global) {
    return !first_offensive_violation(g, s, k, global).has_value();
}

std::optional<int> first_powerful_violation(const Graph& g, const VertexSet& s, int k, bool global) {
    if (auto v = first_defensive_violation(g, s, k, global)) return v;
    return first_offensive_violation(g, s, k + 2, global);
}

bool is_powerful_k_alliance(const Graph& g, const VertexSet& s, int k, bool global) {
    return !first_powerful_violation(g, s, k, global).has_value();
}

} // namespace monopolies
