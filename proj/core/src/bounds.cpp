#include "monopolies/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "monopolies/intmath.hpp"

namespace monopolies {

namespace {

void check_k_in_range(const Graph& g, int k) {
    KRange r = valid_k_range(g);
    if (!r.contains(k))
        throw std::out_of_range("k=" + std::to_string(k) + " outside valid k range " + r.to_string());
}

} // namespace

const char* BoundRecord::side_name(Side s) {
    switch (s) {
        case Side::lower: return "lower";
        case Side::upper: return "upper";
        case Side::exact: return "exact";
    }
    return "?";
}

GeneralBounds general_bounds(const Graph& g, int k) {
    check_k_in_range(g, k);
    GeneralBounds b;
    // A maximum-degree vertex needs ceil((max+2k)/2) controlled neighbors, all
    // of them members, but it need not be a member itself, so no +1 for it.
    // Any member does count itself on top of its required in-set neighbors,
    // which yields the min-degree term. Strengthening the first term by one
    // regardless of membership is unsound: brute force finds irregular graphs
    // whose optimum sits strictly below that value.
    b.lower = std::max(ceil_div(g.max_degree() + 2LL * k, 2),
                       ceil_div(g.min_degree() + 2LL * k + 2, 2));
    b.upper = g.order() - floor_div(g.min_degree() - 2LL * k, 2);
    return b;
}

long long size_lower_bound(const Graph& g, int k) {
    check_k_in_range(g, k);
    if (k == 0)
        throw std::invalid_argument("size lower bound is undefined at k = 0 (denominator vanishes)");
    if (k < 0)
        throw std::invalid_argument("size lower bound is only established for k >= 1; "
                                    "see size_lower_bound_experimental");
    return ceil_div(3LL * k * g.order() - g.size(), 2LL * k);
}

long long size_lower_bound_experimental(const Graph& g, int k) {
    if (k >= 0) throw std::invalid_argument("experimental variant is for k <= -1 only");
    return ceil_div(3LL * k * g.order() - g.size(), 2LL * k);
}

long long regular_lower_bound(const Graph& g, int k) {
    if (!g.is_regular()) throw std::invalid_argument("graph is not regular");
    check_k_in_range(g, k);
    long long r = g.min_degree();
    return ceil_div(g.order() * (2LL * k + r), 2 * r);
}

long long exact_formula(const FamilySpec& spec, int k) {
    Graph g = generate(spec);   // also validates the parameters
    switch (spec.family) {
        case Family::complete: {
            check_k_in_range(g, k);
            return ceil_div(spec.params[0] + 2LL * k + 1, 2);
        }
        case Family::complete_bipartite: {
            check_k_in_range(g, k);
            return ceil_div(spec.params[0] + 2LL * k, 2) + ceil_div(spec.params[1] + 2LL * k, 2);
        }
        case Family::cycle:
        case Family::path: {
            if (k != 0)
                throw std::invalid_argument("closed form for paths and cycles covers k = 0 only");
            long long n = spec.params[0];
            if (n % 4 == 0) return n / 2;
            if (n % 2 == 0) return (n + 2) / 2;
            return (n + 1) / 2;
        }
        case Family::wheel:
        case Family::fan: {
            if (k != 1)
                throw std::invalid_argument("closed form for wheels and fans covers k = 1 only");
            check_k_in_range(g, k);
            return spec.params[0];
        }
        default:
            throw std::invalid_argument("no closed form for family " +
                                        std::string(family_name(spec.family)));
    }
}

bool is_monopoly_number_two(const Graph& g) {
    int n = g.order();
    int m = g.size();
    if (n > 4 || !is_connected(g)) return false;
    std::vector<int> deg;
    for (int v = 0; v < n; ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    if (n == 2) return m == 1;                                     // P_2
    if (n == 3) return m == 2 || m == 3;                           // P_3, C_3
    if (n == 4) {
        if (m == 3) return deg == std::vector<int>{1, 1, 2, 2};    // P_4 (not the star)
        if (m == 4) return deg == std::vector<int>{2, 2, 2, 2};    // C_4
    }
    return false;
}

bool is_monopoly_number_n(const Graph& g, int k) {
    check_k_in_range(g, k);
    int delta = g.min_degree();
    if (k != static_cast<int>(floor_div(delta, 2))) return false;
    bool even = delta % 2 == 0;
    for (int v = 0; v < g.order(); ++v) {
        bool ok = false;
        for (int w : g.neighbors(v)) {
            int d = g.degree(w);
            if (d == delta || (even && d == delta + 1)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

} // namespace monopolies
