#include "monopolies/reduction.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace monopolies {

ReductionOutput build_reduction(const Graph& g) {
    const int n = g.order();
    const int m = g.size();
    if (g.min_degree() == 0)
        throw std::domain_error("expansion requires a graph with no isolated vertex");
    if (!is_connected(g))
        throw std::domain_error("expansion requires a connected graph");

    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<VertexOrigin> origin;
    origin.reserve(n);
    for (int v = 0; v < n; ++v)
        origin.push_back({VertexOrigin::Role::original, v, -1, -1});

    int next = n;
    for (int v = 0; v < n; ++v) {
        const int paths = g.degree(v) - 1;
        for (int p = 0; p < paths; ++p) {
            const int base = next;   // base + 0 .. base + 4 are positions 1..5
            for (int pos = 1; pos <= 5; ++pos)
                origin.push_back({VertexOrigin::Role::path_vertex, v, p, pos});
            edges.emplace_back(base, base + 1);
            edges.emplace_back(base + 1, base + 2);
            edges.emplace_back(base + 2, base + 3);
            edges.emplace_back(base + 3, base + 4);
            edges.emplace_back(v, base + 2);
            next += 5;
        }
    }

    Graph h = Graph::from_edges(next, edges);

    ReductionOutput out{std::move(h), std::move(origin),
                        next - n, static_cast<int>(edges.size()) - m, 0};
    for (int u = n; u < next; ++u)
        if (out.h.degree(u) == 1) ++out.added_leaves;

    if (out.added_vertices != 10 * m - 5 * n)
        throw std::logic_error("expansion produced the wrong number of new vertices");
    if (out.added_edges != 10 * m - 5 * n)
        throw std::logic_error("expansion produced the wrong number of new edges");
    if (out.added_leaves != 4 * m - 2 * n)
        throw std::logic_error("expansion produced the wrong number of new leaves");
    for (int v = 0; v < n; ++v)
        if (out.h.degree(v) != 2 * g.degree(v) - 1)
            throw std::logic_error("expansion broke the doubled-degree property at vertex "
                                   + std::to_string(v));
    return out;
}

std::string format_origin_map(const ReductionOutput& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.origin_map.size(); ++i) {
        const VertexOrigin& o = r.origin_map[i];
        os << i << ' ';
        if (o.role == VertexOrigin::Role::original)
            os << "original " << o.g_vertex << " - -";
        else
            os << "path " << o.g_vertex << ' ' << o.path_index << ' ' << o.position;
        os << '\n';
    }
    return os.str();
}

ReductionIdentity verify_reduction_identity(const Graph& g, const SolveOptions& opts) {
    ReductionOutput r = build_reduction(g);
    const long long n = g.order();
    const long long m = g.size();

    if (r.h.order() > solver_order_guard && !opts.allow_large)
        return {ReductionIdentity::Status::too_large, -1, -1, false};

    const long long lhs = min_k_monopoly(r.h, 0, opts).optimum;
    const long long rhs = 6 * m - 3 * n + min_total_dominating(g, opts).optimum;
    return {ReductionIdentity::Status::verified, lhs, rhs, lhs == rhs};
}

} // namespace monopolies
