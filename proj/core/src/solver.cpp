#include "monopolies/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "monopolies/intmath.hpp"
#include "monopolies/predicates.hpp"

namespace monopolies {

namespace {

constexpr long long kNoSolution = std::numeric_limits<long long>::max();

// Every minimization here is an instance of one scheme: choose S ⊆ V
// minimizing |S| subject to |N(v) ∩ S| >= req_in[v] for members and
// >= req_out[v] for non-members, with req_in[v] <= req_out[v] throughout.
struct ProblemSpec {
    std::vector<int> req_in;
    std::vector<int> req_out;
    bool require_nonempty = false;
    long long lower_bound = 1;   // proven floor on |S|, used to stop early
};

// Branch-and-bound over include/exclude decisions with unit propagation.
//
// Soundness of the pruning does not lean on monotonicity: for any completion
// of a partial assignment, |N(v) ∩ S| <= in_cnt[v] + und_cnt[v], and v's
// final requirement is at least req_in[v] while v is not excluded (req_out[v]
// once it is). A vertex whose potential falls below that floor kills the
// branch; a potential exactly meeting it forces the undecided neighborhood in.
class SubsetSearch {
public:
    SubsetSearch(const Graph& g, const ProblemSpec& p, const std::vector<int>& order)
        : g_(g), p_(p), order_(order), n_(g.order()),
          state_(n_, UNDECIDED), in_cnt_(n_, 0), und_cnt_(n_, 0) {
        for (int v = 0; v < n_; ++v) und_cnt_[v] = g.degree(v);
    }

    // Establishes the optimum below start_best. Returns kNoSolution when no
    // assignment beats it.
    long long minimize(const std::vector<std::pair<int, char>>& prefix, long long start_best) {
        best_ = start_best;
        found_ = kNoSolution;
        lex_mode_ = false;
        if (!setup(prefix)) return kNoSolution;
        dfs(0);
        return found_;
    }

    // First feasible set of size <= budget in lexicographic order of sorted
    // vertex lists; include-first index-order search visits exactly that
    // order. Used to canonicalize the reported witness.
    bool find_lex_smallest(long long budget, std::vector<char>& out_membership) {
        best_ = budget + 1;
        found_ = kNoSolution;
        lex_mode_ = true;
        if (!setup({})) return false;
        dfs(0);
        if (found_ == kNoSolution) return false;
        out_membership = best_membership_;
        return true;
    }

    unsigned long long nodes() const { return nodes_; }

    // Depth-limited expansion of the branch tree into decision prefixes, for
    // deterministic fan-out. The node count matches what a direct search
    // would have spent on those levels.
    bool expand_tasks(int depth, std::vector<std::vector<std::pair<int, char>>>& out) {
        best_ = kNoSolution;
        found_ = kNoSolution;
        lex_mode_ = false;
        if (!setup({})) return false;
        std::vector<std::pair<int, char>> prefix;
        expand(0, depth, prefix, out);
        return true;
    }

private:
    enum : char { UNDECIDED = 0, IN = 1, OUT = 2 };

    bool setup(const std::vector<std::pair<int, char>>& prefix) {
        // root pass: every vertex gets checked once
        for (int v = 0; v < n_; ++v) dirty_.push_back(v);
        if (!propagate()) return false;
        for (auto [v, val] : prefix) {
            if (state_[v] != UNDECIDED) {
                if (state_[v] == val) continue;
                return false;   // prefix contradicts forced assignments
            }
            if (!decide(v, val) || !propagate()) return false;
        }
        return true;
    }

    bool decide(int v, char val) {
        state_[v] = val;
        trail_.push_back(v);
        if (val == IN) ++in_count_;
        for (int w : g_.neighbors(v)) {
            --und_cnt_[w];
            if (val == IN) ++in_cnt_[w];
            dirty_.push_back(w);
        }
        dirty_.push_back(v);
        return true;
    }

    bool check(int v) {
        int pot = in_cnt_[v] + und_cnt_[v];
        if (state_[v] == UNDECIDED && pot < p_.req_out[v]) {
            // cannot afford to leave v outside
            if (!decide(v, IN)) return false;
        }
        int need = state_[v] == OUT ? p_.req_out[v] : p_.req_in[v];
        if (pot < need) return false;
        if (pot == need && in_cnt_[v] < need) {
            for (int w : g_.neighbors(v)) {
                if (state_[w] == UNDECIDED) {
                    if (!decide(w, IN)) return false;
                }
            }
        }
        return true;
    }

    bool propagate() {
        while (!dirty_.empty()) {
            int v = dirty_.back();
            dirty_.pop_back();
            if (!check(v)) {
                dirty_.clear();
                return false;
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            if (state_[v] == IN) --in_count_;
            for (int w : g_.neighbors(v)) {
                ++und_cnt_[w];
                if (state_[v] == IN) --in_cnt_[w];
            }
            state_[v] = UNDECIDED;
        }
        dirty_.clear();
    }

    void record_leaf() {
        if (p_.require_nonempty && in_count_ == 0) return;
        if (in_count_ >= best_) return;
        best_ = in_count_;
        found_ = in_count_;
        best_membership_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) best_membership_[v] = state_[v] == IN ? 1 : 0;
        if (lex_mode_ || best_ <= p_.lower_bound) stop_ = true;
    }

    void dfs(std::size_t pos) {
        if (stop_) return;
        while (pos < order_.size() && state_[order_[pos]] != UNDECIDED) ++pos;
        if (pos == order_.size()) {
            record_leaf();
            return;
        }
        ++nodes_;
        int v = order_[pos];
        std::size_t mark = trail_.size();
        if (in_count_ + 1 < best_) {
            if (decide(v, IN) && propagate() && in_count_ < best_) dfs(pos + 1);
            undo_to(mark);
            if (stop_) return;
        }
        if (decide(v, OUT) && propagate() && in_count_ < best_) dfs(pos + 1);
        undo_to(mark);
    }

    void expand(std::size_t pos, int depth,
                std::vector<std::pair<int, char>>& prefix,
                std::vector<std::vector<std::pair<int, char>>>& out) {
        while (pos < order_.size() && state_[order_[pos]] != UNDECIDED) ++pos;
        if (depth == 0 || pos == order_.size()) {
            out.push_back(prefix);
            return;
        }
        ++nodes_;
        int v = order_[pos];
        std::size_t mark = trail_.size();
        for (char val : {IN, OUT}) {
            if (decide(v, val) && propagate()) {
                prefix.emplace_back(v, val);
                expand(pos + 1, depth - 1, prefix, out);
                prefix.pop_back();
            }
            undo_to(mark);
        }
    }

    const Graph& g_;
    const ProblemSpec& p_;
    const std::vector<int>& order_;
    int n_;
    std::vector<char> state_;
    std::vector<int> in_cnt_, und_cnt_;
    std::vector<int> trail_;
    std::vector<int> dirty_;
    int in_count_ = 0;
    long long best_ = kNoSolution;
    long long found_ = kNoSolution;
    std::vector<char> best_membership_;
    bool lex_mode_ = false;
    bool stop_ = false;
    unsigned long long nodes_ = 0;
};

// Adds the highest-gain vertex until all requirements are met; ties fall to
// the smallest index, so the warm start is deterministic. Returns kNoSolution
// when the greedy stalls (the search then settles feasibility by itself).
long long greedy_warm_start(const Graph& g, const ProblemSpec& p) {
    int n = g.order();
    std::vector<char> in(n, 0);
    std::vector<int> in_cnt(n, 0);
    auto deficit = [&](int v) {
        int need = in[v] ? p.req_in[v] : p.req_out[v];
        return std::max(0, need - in_cnt[v]);
    };
    long long total = 0;
    for (int v = 0; v < n; ++v) total += deficit(v);
    int size = 0;
    while (total > 0) {
        int best_v = -1;
        long long best_gain = 0;
        for (int u = 0; u < n; ++u) {
            if (in[u]) continue;
            long long gain = deficit(u) - std::max(0, p.req_in[u] - in_cnt[u]);
            for (int w : g.neighbors(u))
                if (deficit(w) > 0) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_v = u;
            }
        }
        if (best_v < 0) return kNoSolution;
        total -= deficit(best_v);
        in[best_v] = 1;
        total += deficit(best_v);
        for (int w : g.neighbors(best_v)) {
            total -= deficit(w);
            ++in_cnt[w];
            total += deficit(w);
        }
        ++size;
    }
    if (p.require_nonempty && size == 0) return kNoSolution;
    return size;
}

std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

struct CoreResult {
    long long cardinality = kNoSolution;
    std::vector<char> membership;
    unsigned long long nodes = 0;
};

// Phase 1 establishes the optimal cardinality, fanning out over a fixed,
// instance-determined set of decision prefixes so that the node count and
// the result are identical for every worker count. Phase 2 re-derives the
// lexicographically smallest witness of that cardinality.
CoreResult solve_core(const Graph& g, const ProblemSpec& p, const SolveOptions& opts) {
    int n = g.order();
    if (n > solver_order_guard && !opts.allow_large)
        throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds the " +
                                    std::to_string(solver_order_guard) +
                                    "-vertex search guard (set allow_large to override)");

    std::vector<int> order = branch_order(g);
    CoreResult result;

    long long warm = greedy_warm_start(g, p);
    long long best = warm == kNoSolution ? kNoSolution : warm;
    unsigned long long nodes = 0;

    if (best != kNoSolution && best <= p.lower_bound) {
        // greedy met a proven floor; nothing to search
        result.cardinality = best;
    } else {
        const int split_depth = n > 24 ? 6 : 0;
        SubsetSearch splitter(g, p, order);
        std::vector<std::vector<std::pair<int, char>>> tasks;
        bool root_alive = splitter.expand_tasks(split_depth, tasks);
        nodes += splitter.nodes();
        if (root_alive) {
            std::vector<long long> task_best(tasks.size(), kNoSolution);
            std::vector<unsigned long long> task_nodes(tasks.size(), 0);
            auto run_task = [&](std::size_t i) {
                SubsetSearch s(g, p, order);
                task_best[i] = s.minimize(tasks[i], best);
                task_nodes[i] = s.nodes();
            };
            int want = opts.workers > 0 ? opts.workers
                                        : static_cast<int>(std::thread::hardware_concurrency());
            int threads = std::max(1, std::min<int>(want, static_cast<int>(tasks.size())));
            if (threads <= 1) {
                for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
            } else {
                std::atomic<std::size_t> next{0};
                std::vector<std::thread> pool;
                pool.reserve(static_cast<std::size_t>(threads));
                for (int t = 0; t < threads; ++t)
                    pool.emplace_back([&] {
                        for (std::size_t i = next.fetch_add(1); i < tasks.size();
                             i = next.fetch_add(1))
                            run_task(i);
                    });
                for (auto& th : pool) th.join();
            }
            for (std::size_t i = 0; i < tasks.size(); ++i) {
                nodes += task_nodes[i];
                best = std::min(best, task_best[i]);
            }
        }
        result.cardinality = best;
    }

    if (result.cardinality != kNoSolution) {
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        SubsetSearch lex(g, p, identity);
        std::vector<char> membership;
        if (!lex.find_lex_smallest(result.cardinality, membership))
            throw std::logic_error("canonical witness pass failed to reproduce the optimum");
        nodes += lex.nodes();
        result.membership = std::move(membership);
    }
    result.nodes = nodes;
    return result;
}

SolveReport finish_report(const Graph& g, const ProblemSpec& p, const SolveOptions& opts,
                          std::vector<BoundRecord> bounds, bool weight_objective) {
    CoreResult core = solve_core(g, p, opts);
    SolveReport report;
    report.bounds_used = std::move(bounds);
    report.nodes_explored = core.nodes;
    report.witness = VertexSet(g.order());
    if (core.cardinality == kNoSolution) {
        report.status = SolveStatus::infeasible;
        report.optimum = 0;
        return report;
    }
    report.status = SolveStatus::optimal;
    for (int v = 0; v < g.order(); ++v)
        if (core.membership[v]) report.witness.insert(v);
    report.optimum =
        weight_objective ? 2 * core.cardinality - g.order() : core.cardinality;
    return report;
}

int clamp_int(long long x) {
    x = std::max<long long>(x, std::numeric_limits<int>::min());
    x = std::min<long long>(x, std::numeric_limits<int>::max());
    return static_cast<int>(x);
}

void police_alliance_k(const Graph& g, int k, const char* what) {
    int cap = g.max_degree();
    if (k < -cap || k > cap)
        throw std::out_of_range(std::string(what) + ": k=" + std::to_string(k) +
                                " outside [" + std::to_string(-cap) + ", " + std::to_string(cap) + "]");
}

} // namespace

SolveReport min_k_monopoly(const Graph& g, int k, const SolveOptions& opts) {
    KRange range = valid_k_range(g);   // throws on isolated vertices
    if (!range.contains(k))
        throw std::out_of_range("k=" + std::to_string(k) + " outside valid k range " +
                                range.to_string());
    ProblemSpec p;
    p.req_in.resize(g.order());
    p.req_out.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        int need = clamp_int(ceil_div(g.degree(v) + 2LL * k, 2));
        p.req_in[v] = need;
        p.req_out[v] = need;
    }
    p.require_nonempty = true;

    std::vector<BoundRecord> bounds;
    GeneralBounds gb = general_bounds(g, k);
    bounds.push_back({"degree_lower_bound", BoundRecord::Side::lower, gb.lower, "any graph, valid k"});
    bounds.push_back({"degree_upper_bound", BoundRecord::Side::upper, gb.upper, "any graph, valid k"});
    long long lb = std::max<long long>(2, gb.lower);
    if (k >= 1) {
        long long sz = size_lower_bound(g, k);
        bounds.push_back({"size_lower_bound", BoundRecord::Side::lower, sz, "k >= 1"});
        lb = std::max(lb, sz);
    }
    if (g.is_regular()) {
        long long rb = regular_lower_bound(g, k);
        bounds.push_back({"regular_lower_bound", BoundRecord::Side::lower, rb, "regular graphs"});
        lb = std::max(lb, rb);
    }
    p.lower_bound = lb;

    SolveReport report = finish_report(g, p, opts, std::move(bounds), false);
    if (report.status == SolveStatus::optimal && !is_k_monopoly(g, report.witness, k))
        throw std::logic_error("internal check failed: witness is not a k-monopoly");
    return report;
}

SolveReport min_total_dominating(const Graph& g, const SolveOptions& opts) {
    ProblemSpec p;
    p.req_in.assign(g.order(), 1);
    p.req_out.assign(g.order(), 1);
    p.require_nonempty = true;
    p.lower_bound = 2;   // a member needs a member neighbor
    SolveReport report = finish_report(g, p, opts, {}, false);
    if (report.status == SolveStatus::optimal && !is_total_dominating(g, report.witness))
        throw std::logic_error("internal check failed: witness is not total dominating");
    return report;
}

SolveReport min_global_def_off_alliance(const Graph& g, int k, const SolveOptions& opts) {
    police_alliance_k(g, k, "global defensive+offensive alliance");
    ProblemSpec p;
    p.req_in.resize(g.order());
    p.req_out.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        int need = clamp_int(ceil_div(g.degree(v) + static_cast<long long>(k), 2));
        p.req_in[v] = need;
        p.req_out[v] = std::max(1, need);   // outsiders must also be dominated
    }
    p.require_nonempty = true;
    p.lower_bound = 1;
    SolveReport report = finish_report(g, p, opts, {}, false);
    if (report.status == SolveStatus::optimal &&
        !(is_defensive_k_alliance(g, report.witness, k, true) &&
          is_offensive_k_alliance(g, report.witness, k, true)))
        throw std::logic_error("internal check failed: witness is not a global def+off alliance");
    return report;
}

SolveReport min_signed_total_k_dom(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("signed total k-domination is defined for k >= 1");
    ProblemSpec p;
    p.req_in.resize(g.order());
    p.req_out.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        int need = clamp_int(ceil_div(g.degree(v) + static_cast<long long>(k), 2));
        p.req_in[v] = need;
        p.req_out[v] = need;
    }
    p.lower_bound = 1;
    SolveReport report = finish_report(g, p, opts, {}, true);
    if (report.status == SolveStatus::optimal &&
        !is_signed_total_k_dominating(g, SignedAssignment(report.witness), k))
        throw std::logic_error("internal check failed: witness is not signed total k-dominating");
    return report;
}

SolveReport min_global_powerful_alliance(const Graph& g, int k, const SolveOptions& opts) {
    police_alliance_k(g, k, "global powerful alliance");
    ProblemSpec p;
    p.req_in.resize(g.order());
    p.req_out.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        p.req_in[v] = clamp_int(ceil_div(g.degree(v) + static_cast<long long>(k), 2));
        p.req_out[v] =
            std::max(1, clamp_int(ceil_div(g.degree(v) + static_cast<long long>(k) + 2, 2)));
    }
    p.require_nonempty = true;
    p.lower_bound = 1;
    SolveReport report = finish_report(g, p, opts, {}, false);
    if (report.status == SolveStatus::optimal &&
        !is_powerful_k_alliance(g, report.witness, k, true))
        throw std::logic_error("internal check failed: witness is not a global powerful alliance");
    return report;
}

SolveReport min_signed_k_dom(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("signed k-domination is defined for k >= 1");
    ProblemSpec p;
    p.req_in.resize(g.order());
    p.req_out.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        long long d = g.degree(v);
        p.req_in[v] = clamp_int(ceil_div(d + k - 1, 2));
        p.req_out[v] = clamp_int(ceil_div(d + k + 1, 2));
    }
    p.lower_bound = 0;
    SolveReport report = finish_report(g, p, opts, {}, true);
    if (report.status == SolveStatus::optimal &&
        !is_signed_k_dominating(g, SignedAssignment(report.witness), k))
        throw std::logic_error("internal check failed: witness is not signed k-dominating");
    return report;
}

} // namespace monopolies
