// Brute-force isomorphism machinery for small graphs: all isomorphisms
// between two graphs, canonical forms, and spanning-subgraph embedding.
// Backtracking over vertex maps with degree pruning; fine up to ~8 vertices.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// All bijections f: V(a) -> V(b) with (u,v) in E(a) iff (f(u),f(v)) in E(b).
// Empty when the orders differ.  stop_after limits the count (0 = all).
inline std::vector<std::vector<int>> all_isomorphisms(const Graph& a, const Graph& b,
                                                      std::size_t stop_after = 0) {
    std::vector<std::vector<int>> result;
    if (a.order() != b.order() || a.size() != b.size()) return result;
    int n = a.order();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> rec = [&](int u) -> bool {
        if (u == n) {
            result.push_back(map);
            return stop_after != 0 && result.size() >= stop_after;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (a.degree(u) != b.degree(w)) continue;
            bool ok = true;
            for (int v = 0; v < u; ++v) {
                if (a.has_edge(u, v) != b.has_edge(w, map[static_cast<std::size_t>(v)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (rec(u + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
            map[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };
    rec(0);
    return result;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    return !all_isomorphisms(a, b, 1).empty();
}

// Does some relabeling of a sit inside b edge-wise (same order)?  This is the
// spanning-subgraph order used for extremal families.
inline bool embeds_as_spanning_subgraph(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() > b.size()) return false;
    int n = a.order();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> rec = [&](int u) -> bool {
        if (u == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (a.degree(u) > b.degree(w)) continue;
            bool ok = true;
            for (int v = 0; v < u; ++v) {
                if (a.has_edge(u, v) && !b.has_edge(w, map[static_cast<std::size_t>(v)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (rec(u + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
            map[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };
    return rec(0);
}

// Canonical key: order in the top bits, then the maximal upper-triangle bit
// string over all relabelings (pairs in the column order (0,1),(0,2),(1,2),
// (0,3),...).  Two graphs get the same key iff they are isomorphic.
inline uint64_t canonical_key(const Graph& g) {
    int n = g.order();
    if (n * (n - 1) / 2 > 56) throw graph_error("canonical_key: order too large");
    std::vector<int> best(static_cast<std::size_t>(n), -1);
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    uint32_t placed = 0;

    std::function<void(int)> rec = [&](int k) {
        if (k == n) return;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1u) continue;
            int chunk = 0;
            for (int i = 0; i < k; ++i)
                chunk = (chunk << 1) | (g.has_edge(perm[static_cast<std::size_t>(i)], v) ? 1 : 0);
            int& slot = best[static_cast<std::size_t>(k)];
            if (slot >= 0 && chunk < slot) continue;
            if (chunk > slot) {
                slot = chunk;
                for (int j = k + 1; j < n; ++j) best[static_cast<std::size_t>(j)] = -1;
            }
            perm.push_back(v);
            placed |= 1u << v;
            rec(k + 1);
            placed &= ~(1u << v);
            perm.pop_back();
        }
    };
    rec(0);

    uint64_t key = static_cast<uint64_t>(n);
    for (int k = 1; k < n; ++k)
        key = (key << k) | static_cast<uint64_t>(best[static_cast<std::size_t>(k)]);
    return key;
}

}  // namespace rainbow
