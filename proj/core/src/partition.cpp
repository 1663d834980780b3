#include "monopolies/partition.hpp"

#include <stdexcept>
#include <string>

#include "monopolies/predicates.hpp"

namespace monopolies {

namespace {

// Backtracking assignment of vertices to parts in index order. A partial
// assignment stays alive only while every vertex v can still reach
// 2 * delta_Pi(v) >= delta(v) + 2k in every part i, bounding the eventual
// count by assigned-to-i neighbors plus unassigned neighbors.
class PartitionSearch {
public:
    PartitionSearch(const Graph& g, int k, int r)
        : g_(g), k_(k), r_(r), assign_(g.order(), -1),
          part_neighbors_(static_cast<std::size_t>(r) * g.order(), 0),
          unassigned_neighbors_(g.order()) {
        for (int v = 0; v < g_.order(); ++v)
            unassigned_neighbors_[v] = g_.degree(v);
    }

    bool run(std::vector<VertexSet>& parts_out) {
        if (!viable_everywhere()) return false;
        if (!place(0, 0)) return false;
        parts_out.assign(r_, VertexSet::empty_set(g_.order()));
        for (int v = 0; v < g_.order(); ++v)
            parts_out[assign_[v]].insert(v);
        return true;
    }

private:
    int& count(int part, int v) { return part_neighbors_[part * g_.order() + v]; }

    bool viable(int v) const {
        const int slack = 2 * unassigned_neighbors_[v] - g_.degree(v) - 2 * k_;
        for (int i = 0; i < r_; ++i)
            if (2 * part_neighbors_[i * g_.order() + v] + slack < 0) return false;
        return true;
    }

    bool viable_everywhere() const {
        for (int v = 0; v < g_.order(); ++v)
            if (!viable(v)) return false;
        return true;
    }

    bool place(int v, int opened) {
        if (v == g_.order()) return opened == r_;
        if (g_.order() - v < r_ - opened) return false;   // cannot open the rest
        const int limit = opened < r_ ? opened + 1 : r_;
        for (int part = 0; part < limit; ++part) {
            assign_[v] = part;
            for (int w : g_.neighbors(v)) {
                ++count(part, w);
                --unassigned_neighbors_[w];
            }
            bool alive = true;
            for (int w : g_.neighbors(v))
                if (!viable(w)) { alive = false; break; }
            if (alive && place(v + 1, part == opened ? opened + 1 : opened))
                return true;
            for (int w : g_.neighbors(v)) {
                --count(part, w);
                ++unassigned_neighbors_[w];
            }
            assign_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int r_;
    std::vector<int> assign_;
    std::vector<int> part_neighbors_;
    std::vector<int> unassigned_neighbors_;
};

} // namespace

PartitionResult find_monopoly_partition(const Graph& g, int k, int r, bool enforce_bound) {
    if (r < 2)
        throw std::invalid_argument("a partition needs at least two parts, got r=" +
                                    std::to_string(r));
    const KRange range = valid_k_range(g);
    if (!range.contains(k))
        throw std::out_of_range("k=" + std::to_string(k) + " outside valid k range " +
                                range.to_string());

    PartitionResult res{PartitionResult::Status::none_exists, k, r, {}};
    if (enforce_bound && (k > 0 || r > 2 - 2 * k)) {
        res.status = PartitionResult::Status::bound_excluded;
        return res;
    }
    if (r > g.order()) return res;

    PartitionSearch search(g, k, r);
    std::vector<VertexSet> parts;
    if (!search.run(parts)) return res;

    for (const VertexSet& p : parts)
        if (!is_k_monopoly(g, p, k))
            throw std::logic_error("partition search returned a part that is not a k-monopoly");
    res.status = PartitionResult::Status::found;
    res.parts = std::move(parts);
    return res;
}

TwoPartReport check_two_part_properties(const Graph& g, const VertexSet& x,
                                        const VertexSet& y) {
    const int n = g.order();
    if (x.universe_size() != n || y.universe_size() != n)
        throw std::invalid_argument("parts must be sets over the graph's vertices");
    if (x.empty()) throw std::invalid_argument("first part is empty");
    if (y.empty()) throw std::invalid_argument("second part is empty");
    for (int v = 0; v < n; ++v) {
        const bool in_x = x.contains(v);
        const bool in_y = y.contains(v);
        if (in_x && in_y)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in both parts");
        if (!in_x && !in_y)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in neither part");
    }
    if (auto v = first_uncontrolled_vertex(g, x, 0))
        throw std::invalid_argument("first part is not a 0-monopoly: vertex " +
                                    std::to_string(*v) + " is not controlled");
    if (auto v = first_uncontrolled_vertex(g, y, 0))
        throw std::invalid_argument("second part is not a 0-monopoly: vertex " +
                                    std::to_string(*v) + " is not controlled");

    TwoPartReport rep{};
    rep.split_degrees_equal = true;
    rep.all_degrees_even = true;
    for (int v = 0; v < n; ++v) {
        if (degree_in(g, v, x) != degree_in(g, v, y)) rep.split_degrees_equal = false;
        if (g.degree(v) % 2 != 0) rep.all_degrees_even = false;
    }
    rep.edges_in_x = induced_edge_count(g, x);
    rep.edges_in_y = induced_edge_count(g, y);
    rep.induced_sizes_equal = rep.edges_in_x == rep.edges_in_y;
    rep.cut = cut_size(g, x);
    rep.cut_identity = rep.cut == g.size() - 2 * rep.edges_in_x;
    return rep;
}

} // namespace monopolies
