#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace monopolies {

// Subset of {0, ..., n-1} backed by a word array. Universe size is fixed at
// construction; mixing sets bound to different universes is an error.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe_size);

    static VertexSet empty_set(int universe_size);
    static VertexSet full_set(int universe_size);
    static VertexSet of(int universe_size, std::initializer_list<int> vs);
    static VertexSet from_vertices(int universe_size, const std::vector<int>& vs);

    int universe_size() const { return n_; }
    int count() const;
    bool empty() const;
    bool contains(int v) const;

    void insert(int v);
    void erase(int v);

    VertexSet complement() const;
    int intersection_count(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet operator|(const VertexSet& other) const;
    VertexSet operator&(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;

    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // Members in ascending order.
    std::vector<int> to_vector() const;
    std::string to_string() const;   // "0,1,4,5"

private:
    void check_vertex(int v) const;
    void check_same_universe(const VertexSet& other) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Half-open integer interval of admissible k values for open k-monopolies,
// {1 - ceil(delta/2), ..., floor(delta/2)} for minimum degree delta >= 1.
struct KRange {
    int lo = 0;
    int hi = 0;
    bool contains(int k) const { return lo <= k && k <= hi; }
    std::string to_string() const;   // "[lo, hi]"
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    // Validates: n >= 1, endpoints in range, no self loops, no duplicate
    // edges (in either orientation). Throws std::invalid_argument or
    // std::out_of_range.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    int degree(int v) const;
    int min_degree() const { return min_degree_; }
    int max_degree() const { return max_degree_; }
    bool is_regular() const { return min_degree_ == max_degree_; }

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    const VertexSet& neighbor_set(int v) const;

    // Edges as (u, v) with u < v, sorted ascending.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    Graph() = default;
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int min_degree_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_set_;
    std::vector<std::pair<int, int>> edges_;
};

// |N(v) ∩ S|: neighbors of v inside S. The quantity everything else in this
// library is written in terms of.
int degree_in(const Graph& g, int v, const VertexSet& s);

// Boundary of a nonempty set: vertices outside S with at least one neighbor
// in S. Rejects the empty set.
VertexSet boundary(const Graph& g, const VertexSet& s);

// Number of edges with exactly one endpoint in S.
long long cut_size(const Graph& g, const VertexSet& s);

// Number of edges with both endpoints in S.
long long induced_edge_count(const Graph& g, const VertexSet& s);

// Admissible k interval for open k-monopolies. Throws std::domain_error when
// the graph has an isolated vertex (no k-monopoly exists for any k).
KRange valid_k_range(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Perfect-elimination-ordering check; quadratic-ish, fine at the sizes this
// library targets.
bool is_chordal(const Graph& g);

} // namespace monopolies
