// Brute-force rx_k oracle: enumerate every coloring with q colors for
// q = 1, 2, ... and test each against every k-subset, with its own
// edge-subset tree table.  Deliberately shares no search machinery with the
// backtracking solver; this is the cross-check, not the workhorse.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

class oracle_refusal : public graph_error {
  public:
    using graph_error::graph_error;
};

inline int rx_naive_oracle(const Graph& g, int k) {
    int n = g.order();
    int m = g.size();
    if (!g.is_connected()) throw graph_error("rx_naive_oracle: graph must be connected");
    if (k < 2 || k > n) throw graph_error("rx_naive_oracle: k out of range");
    if (m > 12 || n > 8)
        throw oracle_refusal("rx_naive_oracle: instance too large for full enumeration");

    // Tree table over all 2^m edge subsets: a subset is a tree iff it is
    // acyclic and connected, i.e. it spans exactly |edges|+1 vertices in one
    // piece.  Checked with a tiny union-find per mask.
    std::vector<uint32_t> tree_masks;
    std::vector<uint32_t> tree_vertices;
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        int parent[kMaxVertices];
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        uint32_t verts = 0;
        int edge_count = 0;
        bool cycle = false;
        for (uint32_t rest = mask; rest; rest &= rest - 1) {
            int i = __builtin_ctz(rest);
            const Edge& e = g.edges()[static_cast<std::size_t>(i)];
            verts |= (1u << e.u) | (1u << e.v);
            ++edge_count;
            int a = find(e.u), b = find(e.v);
            if (a == b) {
                cycle = true;
                break;
            }
            parent[a] = b;
        }
        if (cycle) continue;
        if (__builtin_popcount(verts) != edge_count + 1) continue;  // forest, not tree
        tree_masks.push_back(mask);
        tree_vertices.push_back(verts);
    }

    // per k-subset: which tree subsets contain it
    std::vector<std::vector<uint32_t>> covering;
    {
        std::vector<int> subset(static_cast<std::size_t>(k));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                uint32_t want = 0;
                for (int v : subset) want |= 1u << v;
                std::vector<uint32_t> list;
                for (std::size_t t = 0; t < tree_masks.size(); ++t)
                    if ((tree_vertices[t] & want) == want) list.push_back(tree_masks[t]);
                covering.push_back(std::move(list));
                return;
            }
            for (int v = start; v < n; ++v) {
                subset[static_cast<std::size_t>(depth)] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(0, 0);
    }

    std::vector<int> colors(static_cast<std::size_t>(m), 1);
    for (int q = 1; q <= n - 1; ++q) {
        std::fill(colors.begin(), colors.end(), 1);
        while (true) {
            bool all_ok = true;
            for (const auto& list : covering) {
                bool found = false;
                for (uint32_t tree : list) {
                    uint64_t seen = 0;
                    bool rainbow = true;
                    for (uint32_t rest = tree; rest; rest &= rest - 1) {
                        uint64_t bit = 1ull
                                       << colors[static_cast<std::size_t>(__builtin_ctz(rest))];
                        if (seen & bit) {
                            rainbow = false;
                            break;
                        }
                        seen |= bit;
                    }
                    if (rainbow) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok) return q;
            // odometer step over {1..q}^m
            int i = 0;
            while (i < m && colors[static_cast<std::size_t>(i)] == q)
                colors[static_cast<std::size_t>(i++)] = 1;
            if (i == m) break;
            ++colors[static_cast<std::size_t>(i)];
        }
    }
    // unreachable: q = n-1 admits the all-distinct spanning tree coloring
    throw graph_error("rx_naive_oracle: enumeration found no coloring at q = n-1");
}

}  // namespace rainbow
