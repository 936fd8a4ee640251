// Steiner distances and enumeration of minimal trees connecting a terminal
// set.  Trees are reported as edge-index bitmasks over the lexicographic edge
// order; "minimal" means no degree-1 vertex outside the terminal set, which is
// the only kind of tree a rainbow verifier ever has to inspect (pruning a
// non-terminal leaf of a rainbow tree keeps it rainbow).
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using EdgeMask = uint32_t;

struct SteinerQuery {
    const Graph* graph = nullptr;
    std::vector<int> terminals;          // distinct, ascending
    std::optional<int> edge_budget;      // default: order-1

    SteinerQuery(const Graph& g, std::vector<int> s, std::optional<int> budget = std::nullopt)
        : graph(&g), terminals(std::move(s)), edge_budget(budget) {
        std::sort(terminals.begin(), terminals.end());
        if (terminals.size() < 2 || static_cast<int>(terminals.size()) > g.order())
            throw graph_error("SteinerQuery: need 2 <= |S| <= n terminals");
        if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end())
            throw graph_error("SteinerQuery: terminals must be distinct");
        for (int v : terminals)
            if (v < 0 || v >= g.order()) throw graph_error("SteinerQuery: terminal out of range");
        if (edge_budget && (*edge_budget < 0 || *edge_budget > g.size()))
            throw graph_error("SteinerQuery: edge budget out of range");
    }
};

namespace detail {

// Enumerates every minimal tree for the query exactly once and hands its edge
// mask (plus edge count) to the visitor; the visitor returns false to stop.
//
// Growth scheme: start from the least terminal and repeatedly attach edges
// that bring in a new vertex.  At each node the candidate extensions are
// scanned in a fixed order and every candidate skipped before choosing one is
// forbidden in that subtree, so each tree has exactly one derivation.
// Supersets of an emitted (minimal) tree cannot be minimal, so recursion stops
// there.
inline void for_each_minimal_tree(const SteinerQuery& q,
                                  const std::function<bool(EdgeMask, int)>& visit) {
    const Graph& g = *q.graph;
    int budget = q.edge_budget.value_or(g.order() - 1);
    uint32_t terminal_mask = 0;
    for (int v : q.terminals) terminal_mask |= 1u << v;
    int root = q.terminals.front();

    std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
    bool stopped = false;

    // tree_vertices/edge state mutated along the DFS
    std::function<void(uint32_t, EdgeMask, int, EdgeMask)> grow =
        [&](uint32_t verts, EdgeMask tree, int tree_size, EdgeMask forbidden) {
            if (stopped) return;
            if ((verts & terminal_mask) == terminal_mask) {
                bool minimal = true;
                for (int v = 0; v < g.order(); ++v) {
                    if ((verts >> v & 1u) && degree[static_cast<std::size_t>(v)] == 1 &&
                        !(terminal_mask >> v & 1u)) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) {
                    if (!visit(tree, tree_size)) stopped = true;
                    return;  // proper supersets are never minimal
                }
            }
            if (tree_size >= budget) return;
            // each missing terminal still costs at least one edge
            int missing = __builtin_popcount(terminal_mask & ~verts);
            if (tree_size + missing > budget) return;

            EdgeMask local_forbidden = forbidden;
            const auto& es = g.edges();
            for (int i = 0; i < static_cast<int>(es.size()); ++i) {
                if ((local_forbidden >> i) & 1u) continue;
                bool has_u = (verts >> es[static_cast<std::size_t>(i)].u) & 1u;
                bool has_v = (verts >> es[static_cast<std::size_t>(i)].v) & 1u;
                if (has_u == has_v) continue;  // need exactly one endpoint inside
                int nv = has_u ? es[static_cast<std::size_t>(i)].v : es[static_cast<std::size_t>(i)].u;
                int ov = has_u ? es[static_cast<std::size_t>(i)].u : es[static_cast<std::size_t>(i)].v;
                ++degree[static_cast<std::size_t>(nv)];
                ++degree[static_cast<std::size_t>(ov)];
                grow(verts | (1u << nv), tree | (1u << i), tree_size + 1,
                     local_forbidden | (1u << i));
                --degree[static_cast<std::size_t>(nv)];
                --degree[static_cast<std::size_t>(ov)];
                if (stopped) return;
                local_forbidden |= 1u << i;  // skipped from now on in this subtree
            }
        };

    grow(1u << root, 0, 0, 0);
}

}  // namespace detail

// All minimal trees connecting the terminals, as edge masks (grouped order of
// the growth, deterministic).
inline std::vector<EdgeMask> enumerate_trees(const SteinerQuery& q) {
    std::vector<EdgeMask> out;
    detail::for_each_minimal_tree(q, [&](EdgeMask m, int) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Minimum number of edges of a tree in g whose vertices contain S.
inline int steiner_distance(const Graph& g, const std::vector<int>& terminals) {
    require_connected(g, "steiner_distance");
    SteinerQuery probe(g, terminals);  // validates terminals
    if (terminals.size() == 2) {
        auto d = g.distances_from(probe.terminals[0]);
        return d[static_cast<std::size_t>(probe.terminals[1])];
    }
    if (terminals.size() == 3) {
        // optimal three-terminal tree = shortest paths to a meeting vertex
        auto da = g.distances_from(probe.terminals[0]);
        auto db = g.distances_from(probe.terminals[1]);
        auto dc = g.distances_from(probe.terminals[2]);
        int best = -1;
        for (int w = 0; w < g.order(); ++w) {
            int s = da[static_cast<std::size_t>(w)] + db[static_cast<std::size_t>(w)] +
                    dc[static_cast<std::size_t>(w)];
            if (best < 0 || s < best) best = s;
        }
        return best;
    }
    for (int budget = static_cast<int>(terminals.size()) - 1; budget < g.order(); ++budget) {
        bool found = false;
        SteinerQuery q(g, terminals, budget);
        detail::for_each_minimal_tree(q, [&](EdgeMask, int) {
            found = true;
            return false;
        });
        if (found) return budget;
    }
    throw graph_error("steiner_distance: no connecting tree (unreachable for connected input)");
}

// Max Steiner distance over all k-subsets of the vertices.
inline int steiner_diameter(const Graph& g, int k) {
    require_connected(g, "steiner_diameter");
    if (k < 2 || k > g.order()) throw graph_error("steiner_diameter: k out of range");
    std::vector<int> subset(static_cast<std::size_t>(k));
    int best = 0;
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            best = std::max(best, steiner_distance(g, subset));
            return;
        }
        for (int v = start; v < g.order(); ++v) {
            subset[static_cast<std::size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace rainbow
