#include "monopolies/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "monopolies/intmath.hpp"

namespace monopolies {

namespace {
constexpr int kWordBits = 64;

int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
} // namespace

VertexSet::VertexSet(int universe_size) : n_(universe_size) {
    if (universe_size < 0) throw std::invalid_argument("universe size must be non-negative");
    words_.assign(word_count(universe_size), 0);
}

VertexSet VertexSet::empty_set(int universe_size) { return VertexSet(universe_size); }

VertexSet VertexSet::full_set(int universe_size) {
    VertexSet s(universe_size);
    for (int v = 0; v < universe_size; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::of(int universe_size, std::initializer_list<int> vs) {
    VertexSet s(universe_size);
    for (int v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::from_vertices(int universe_size, const std::vector<int>& vs) {
    VertexSet s(universe_size);
    for (int v : vs) s.insert(v);
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("vertex sets bound to different universes");
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

bool VertexSet::contains(int v) const {
    check_vertex(v);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
}

void VertexSet::insert(int v) {
    check_vertex(v);
    words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(int v) {
    check_vertex(v);
    words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    // mask tail bits beyond n_
    int tail = n_ % kWordBits;
    if (tail != 0 && !s.words_.empty())
        s.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return s;
}

int VertexSet::intersection_count(const VertexSet& other) const {
    check_same_universe(other);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
    check_same_universe(other);
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] | other.words_[i];
    return s;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    check_same_universe(other);
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & other.words_[i];
    return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    check_same_universe(other);
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & ~other.words_[i];
    return s;
}

bool VertexSet::operator==(const VertexSet& other) const {
    return n_ == other.n_ && words_ == other.words_;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = 0; v < n_; ++v)
        if ((words_[v / kWordBits] >> (v % kWordBits)) & 1u) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string out;
    bool first = true;
    for (int v : to_vector()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out;
}

std::string KRange::to_string() const {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.adj_set_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        if (g.adj_set_[u].contains(v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.adj_set_[u].insert(v);
        g.adj_set_[v].insert(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    g.m_ = static_cast<int>(g.edges_.size());
    g.min_degree_ = n > 0 ? n : 0;
    g.max_degree_ = 0;
    for (int v = 0; v < n; ++v) {
        int d = static_cast<int>(g.adj_[v].size());
        g.min_degree_ = std::min(g.min_degree_, d);
        g.max_degree_ = std::max(g.max_degree_, d);
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n_));
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    return adj_set_[u].contains(v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

const VertexSet& Graph::neighbor_set(int v) const {
    check_vertex(v);
    return adj_set_[v];
}

int degree_in(const Graph& g, int v, const VertexSet& s) {
    if (s.universe_size() != g.order())
        throw std::invalid_argument("vertex set not bound to this graph");
    return g.neighbor_set(v).intersection_count(s);
}

VertexSet boundary(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.order())
        throw std::invalid_argument("vertex set not bound to this graph");
    if (s.empty()) throw std::invalid_argument("boundary of the empty set is undefined here");
    VertexSet reach(g.order());
    for (int v : s.to_vector()) reach = reach | g.neighbor_set(v);
    return reach.minus(s);
}

long long cut_size(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.order())
        throw std::invalid_argument("vertex set not bound to this graph");
    VertexSet outside = s.complement();
    long long c = 0;
    for (int v : s.to_vector()) c += g.neighbor_set(v).intersection_count(outside);
    return c;
}

long long induced_edge_count(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.order())
        throw std::invalid_argument("vertex set not bound to this graph");
    long long twice = 0;
    for (int v : s.to_vector()) twice += g.neighbor_set(v).intersection_count(s);
    return twice / 2;
}

KRange valid_k_range(const Graph& g) {
    if (g.min_degree() == 0)
        throw std::domain_error("graph has an isolated vertex; no open k-monopoly exists for any k");
    long long d = g.min_degree();
    KRange r;
    r.lo = static_cast<int>(1 - ceil_div(d, 2));
    r.hi = static_cast<int>(floor_div(d, 2));
    return r;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_chordal(const Graph& g) {
    // Repeatedly remove a simplicial vertex (one whose live neighborhood is a
    // clique). The graph is chordal iff this empties it.
    int n = g.order();
    std::vector<char> alive(n, 1);
    for (int removed = 0; removed < n; ++removed) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            std::vector<int> nb;
            for (int w : g.neighbors(v))
                if (alive[w]) nb.push_back(w);
            bool clique = true;
            for (std::size_t i = 0; i < nb.size() && clique; ++i)
                for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
                    if (!g.adjacent(nb[i], nb[j])) clique = false;
            if (clique) pick = v;
        }
        if (pick < 0) return false;
        alive[pick] = 0;
    }
    return true;
}

} // namespace monopolies
