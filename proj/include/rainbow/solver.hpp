// Exact k-rainbow-index computation by backtracking over edge colors.
//
// Search design:
//   * colors are assigned to edges in lexicographic position order;
//   * cut edges are pre-assigned the distinct colors 1..s (every k-rainbow
//     coloring must give distinct colors to cut edges, and color names can be
//     permuted so cut edge i carries color i);
//   * a non-cut edge may reuse any color seen so far or open exactly one new
//     color (first-appearance canonical naming kills palette symmetry);
//   * per k-subset, the minimal connecting trees of at most q edges are
//     precomputed; a branch dies as soon as some subset has no tree whose
//     colored edges are pairwise distinct.
// rx_exact scans q upward from the Steiner-diameter lower bound, so the value
// it reports comes with a completed refutation at q-1.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/steiner.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

struct SearchBudget {
    uint64_t max_nodes = 2'000'000'000ull;  // per decision call
};

struct SearchStats {
    uint64_t nodes = 0;
    int decision_calls = 0;
    bool complete = true;
};

enum class DecisionStatus { Satisfiable, Unsatisfiable, BudgetExceeded };

struct DecisionResult {
    DecisionStatus status = DecisionStatus::Unsatisfiable;
    std::optional<Coloring> coloring;
    SearchStats stats;
};

struct RxResult {
    std::optional<int> value;          // empty: unknown within budget
    std::optional<Coloring> witness;   // verified coloring with `value` colors
    int lower_bound = 0;               // rx is known to lie in [lower, upper]
    int upper_bound = 0;
    SearchStats stats;
};

namespace detail {

struct SubsetTrees {
    std::vector<EdgeMask> trees;  // ascending edge count
    std::vector<int> sizes;
    int min_size = 0;
};

class RainbowSearch {
  public:
    RainbowSearch(const Graph& g, int k) : g_(g), k_(k) {
        require_connected(g, "rx search");
        if (k < 2 || k > g.order()) throw graph_error("rx search: k out of range");
        StructureReport rep = structure_report(g);
        for (const Bridge& b : rep.bridges)
            bridge_positions_.push_back(g.edge_index(b.x, b.y));

        std::vector<int> subset(static_cast<std::size_t>(k));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k_) {
                SubsetTrees st;
                SteinerQuery q(g_, subset);
                detail::for_each_minimal_tree(q, [&](EdgeMask m, int size) {
                    st.trees.push_back(m);
                    st.sizes.push_back(size);
                    return true;
                });
                std::vector<std::size_t> order(st.trees.size());
                for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                    return st.sizes[a] < st.sizes[b];
                });
                SubsetTrees sorted;
                for (std::size_t i : order) {
                    sorted.trees.push_back(st.trees[i]);
                    sorted.sizes.push_back(st.sizes[i]);
                }
                sorted.min_size = sorted.sizes.empty() ? g_.order() : sorted.sizes.front();
                subsets_.push_back(std::move(sorted));
                return;
            }
            for (int v = start; v < g_.order(); ++v) {
                subset[static_cast<std::size_t>(depth)] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(0, 0);
    }

    int bridge_count() const { return static_cast<int>(bridge_positions_.size()); }

    // max over subsets of the smallest connecting tree = Steiner diameter
    int steiner_diameter() const {
        int d = 0;
        for (const auto& s : subsets_) d = std::max(d, s.min_size);
        return d;
    }

    DecisionResult decide(int q, const SearchBudget& budget) const {
        DecisionResult res;
        res.stats.decision_calls = 1;
        int m = g_.size();
        int s = bridge_count();
        if (s > q || q < 1) {
            res.status = DecisionStatus::Unsatisfiable;
            return res;
        }

        // trees of more than q edges can never be rainbow with q colors
        std::vector<int> limit(subsets_.size());
        for (std::size_t i = 0; i < subsets_.size(); ++i) {
            const auto& sz = subsets_[i].sizes;
            limit[i] = static_cast<int>(
                std::upper_bound(sz.begin(), sz.end(), q) - sz.begin());
            if (limit[i] == 0) {
                res.status = DecisionStatus::Unsatisfiable;
                return res;
            }
        }

        std::vector<int> color(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < s; ++i)
            color[static_cast<std::size_t>(bridge_positions_[static_cast<std::size_t>(i)])] =
                i + 1;

        std::vector<int> free_positions;
        for (int i = 0; i < m; ++i)
            if (color[static_cast<std::size_t>(i)] == 0) free_positions.push_back(i);

        // subsets to recheck when a given edge position changes color
        std::vector<std::vector<int>> incidence(static_cast<std::size_t>(m));
        for (std::size_t si = 0; si < subsets_.size(); ++si) {
            EdgeMask any = 0;
            for (int t = 0; t < limit[si]; ++t) any |= subsets_[si].trees[static_cast<std::size_t>(t)];
            EdgeMask rest = any;
            while (rest) {
                int e = __builtin_ctz(rest);
                rest &= rest - 1;
                incidence[static_cast<std::size_t>(e)].push_back(static_cast<int>(si));
            }
        }

        std::vector<int> witness(subsets_.size(), -1);
        uint64_t nodes = 0;
        bool aborted = false;

        auto tree_alive = [&](EdgeMask tree) {
            uint64_t seen = 0;
            while (tree) {
                int e = __builtin_ctz(tree);
                tree &= tree - 1;
                int col = color[static_cast<std::size_t>(e)];
                if (col) {
                    uint64_t bit = 1ull << col;
                    if (seen & bit) return false;
                    seen |= bit;
                }
            }
            return true;
        };

        auto recheck = [&](int si, int pos) {
            int w = witness[static_cast<std::size_t>(si)];
            if (w >= 0) {
                EdgeMask wt = subsets_[static_cast<std::size_t>(si)].trees[static_cast<std::size_t>(w)];
                if (!((wt >> pos) & 1u)) return true;  // untouched, still alive
                if (tree_alive(wt)) return true;
            }
            const auto& trees = subsets_[static_cast<std::size_t>(si)].trees;
            for (int t = 0; t < limit[static_cast<std::size_t>(si)]; ++t) {
                if (tree_alive(trees[static_cast<std::size_t>(t)])) {
                    witness[static_cast<std::size_t>(si)] = t;
                    return true;
                }
            }
            return false;
        };

        std::function<bool(std::size_t, int)> dfs = [&](std::size_t depth, int max_used) -> bool {
            if (depth == free_positions.size()) return true;
            int pos = free_positions[depth];
            int top = std::min(q, max_used + 1);
            for (int c = 1; c <= top; ++c) {
                if (++nodes > budget.max_nodes) {
                    aborted = true;
                    return false;
                }
                color[static_cast<std::size_t>(pos)] = c;
                bool ok = true;
                for (int si : incidence[static_cast<std::size_t>(pos)]) {
                    if (!recheck(si, pos)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && dfs(depth + 1, std::max(max_used, c))) return true;
                if (aborted) {
                    color[static_cast<std::size_t>(pos)] = 0;
                    return false;
                }
            }
            color[static_cast<std::size_t>(pos)] = 0;
            return false;
        };

        bool sat = dfs(0, s);
        res.stats.nodes = nodes;
        if (aborted) {
            res.status = DecisionStatus::BudgetExceeded;
            res.stats.complete = false;
        } else if (sat) {
            res.status = DecisionStatus::Satisfiable;
            res.coloring = make_coloring(g_, q, color);
        } else {
            res.status = DecisionStatus::Unsatisfiable;
        }
        return res;
    }

  private:
    const Graph& g_;
    int k_;
    std::vector<int> bridge_positions_;
    std::vector<SubsetTrees> subsets_;
};

}  // namespace detail

// Decision form: a valid k-rainbow coloring with at most q colors, or nullopt
// after a complete refutation.  Throws on budget exhaustion (callers that need
// the tri-state use rx_exact).
inline std::optional<Coloring> rx_decision(const Graph& g, int k, int q,
                                           const SearchBudget& budget = {}) {
    detail::RainbowSearch search(g, k);
    DecisionResult r = search.decide(q, budget);
    if (r.status == DecisionStatus::BudgetExceeded)
        throw graph_error("rx_decision: node budget exceeded");
    if (r.status == DecisionStatus::Satisfiable) {
        if (!is_k_rainbow(g, *r.coloring, k).ok)
            throw graph_error("rx_decision: internal error, witness failed re-verification");
        return r.coloring;
    }
    return std::nullopt;
}

// Least q admitting a k-rainbow coloring, with a re-verified witness.  On
// budget exhaustion the result reports value-unknown plus the proven bracket.
inline RxResult rx_exact(const Graph& g, int k, const SearchBudget& budget = {}) {
    detail::RainbowSearch search(g, k);
    RxResult res;
    int lo = std::max({search.steiner_diameter(), search.bridge_count(), 1});
    int hi = std::max(lo, g.order() - 1);
    res.lower_bound = lo;
    res.upper_bound = hi;
    for (int q = lo; q <= hi; ++q) {
        DecisionResult r = search.decide(q, budget);
        res.stats.nodes += r.stats.nodes;
        res.stats.decision_calls += r.stats.decision_calls;
        if (r.status == DecisionStatus::BudgetExceeded) {
            res.stats.complete = false;
            res.lower_bound = q;  // all smaller palettes are refuted
            return res;
        }
        if (r.status == DecisionStatus::Satisfiable) {
            if (!is_k_rainbow(g, *r.coloring, k).ok)
                throw graph_error("rx_exact: internal error, witness failed re-verification");
            res.value = q;
            res.witness = std::move(r.coloring);
            res.lower_bound = res.upper_bound = q;
            return res;
        }
    }
    throw graph_error("rx_exact: exhausted bracket without a coloring (impossible)");
}

}  // namespace rainbow
