#include "corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace testsupport {

int SmallGraph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

bool SmallGraph::connected() const {
    if (n == 0) return false;
    uint32_t reach = 1;
    for (;;) {
        uint32_t next = reach;
        for (int v = 0; v < n; ++v)
            if (reach >> v & 1) next |= adj[v];
        if (next == reach) break;
        reach = next;
    }
    return reach == (1u << n) - 1;
}

std::vector<std::pair<int, int>> SmallGraph::edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(u, v)) out.emplace_back(u, v);
    return out;
}

uint32_t canonical_code(const SmallGraph& g) {
    const int n = g.n;
    if (n <= 1) return 0;
    if (n > 8) throw std::logic_error("canonical_code supports at most 8 vertices");
    const int total_bits = n * (n - 1) / 2;

    // Position j may only take a vertex of the j-th largest degree, which
    // every isomorph shares, so restricting the search this way keeps the
    // minimum well defined while cutting most of the n! relabelings.
    std::array<int, 8> target{};
    for (int v = 0; v < n; ++v) target[v] = g.degree(v);
    std::sort(target.begin(), target.begin() + n, std::greater<int>());

    uint32_t best = UINT32_MAX;
    std::array<int, 8> perm{};
    std::array<bool, 8> used{};

    auto rec = [&](auto&& self, int j, uint32_t val, int bits) -> void {
        if (j == n) {
            best = std::min(best, val);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != target[j]) continue;
            uint32_t block = 0;
            for (int i = 0; i < j && i < 8; ++i)
                block = block << 1 | (g.edge(perm[i], v) ? 1u : 0u);
            const uint32_t nval = (val << j) | block;
            const int nbits = bits + j;
            if (best != UINT32_MAX && nval > (best >> (total_bits - nbits))) continue;
            used[v] = true;
            perm[j] = v;
            self(self, j + 1, nval, nbits);
            used[v] = false;
        }
    };
    rec(rec, 0, 0u, 0);
    return best;
}

namespace {

std::vector<std::vector<SmallGraph>> build_classes() {
    std::vector<std::vector<SmallGraph>> levels(9);
    levels[1].push_back(SmallGraph{1, {}});

    // Every connected graph keeps some vertex whose removal leaves it
    // connected, so augmenting the (n-1)-vertex classes with one new vertex
    // and every nonempty neighborhood reaches every n-vertex class.
    for (int n = 2; n <= 8; ++n) {
        std::unordered_set<uint32_t> seen;
        for (const SmallGraph& h : levels[n - 1]) {
            for (uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
                SmallGraph c;
                c.n = n;
                c.adj = h.adj;
                c.adj[n - 1] = static_cast<uint8_t>(nb);
                for (int v = 0; v < n - 1; ++v)
                    if (nb >> v & 1) c.adj[v] = static_cast<uint8_t>(c.adj[v] | 1u << (n - 1));
                if (seen.insert(canonical_code(c)).second) levels[n].push_back(c);
            }
        }
    }

    static constexpr std::array<std::size_t, 9> expect{0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n)
        if (levels[n].size() != expect[n])
            throw std::logic_error("connected class count for n=" + std::to_string(n) +
                                   " came out as " + std::to_string(levels[n].size()) +
                                   ", expected " + std::to_string(expect[n]));
    return levels;
}

} // namespace

const std::vector<std::vector<SmallGraph>>& connected_classes() {
    static const std::vector<std::vector<SmallGraph>> levels = build_classes();
    return levels;
}

monopolies::Graph to_graph(const SmallGraph& sg) {
    return monopolies::Graph::from_edges(sg.n, sg.edge_pairs());
}

monopolies::Graph random_connected_graph(std::mt19937& rng, int n, double extra) {
    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        const int u = pick(rng);
        has[u][v] = 1;
        edges.emplace_back(u, v);
    }
    std::bernoulli_distribution flip(extra);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!has[u][v] && flip(rng)) edges.emplace_back(u, v);
    return monopolies::Graph::from_edges(n, edges);
}

} // namespace testsupport
