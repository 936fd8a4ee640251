// Structural primitives: bridges, blocks, cyclomatic number, girth, edge
// contraction, basic graph (all cut edges contracted) and pendant forests.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct Bridge {
    // Oriented: x is the endpoint nearer the closest block (ties: smaller id).
    int x = 0, y = 0;
    bool internal = false;  // lies on the path between two blocks
    friend bool operator==(const Bridge& a, const Bridge& b) {
        return a.x == b.x && a.y == b.y && a.internal == b.internal;
    }
};

namespace detail {

struct BiconnectedDecomposition {
    std::vector<Edge> bridge_edges;                 // normalized u<v, lex sorted
    std::vector<std::vector<int>> block_vertices;   // blocks with >= 3 vertices
};

// Classic DFS low-link decomposition into biconnected components.  A component
// that is a single edge is a bridge; larger components are blocks (the K2
// "blocks" are deliberately not reported as blocks).
inline BiconnectedDecomposition biconnected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    BiconnectedDecomposition out;

    std::function<void(int, int)> dfs = [&](int u, int parent_edge_to) {
        low[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(u)];
        uint32_t nb = g.neighbors(u);
        while (nb) {
            int w = __builtin_ctz(nb);
            nb &= nb - 1;
            if (w == parent_edge_to) continue;
            if (depth[static_cast<std::size_t>(w)] < 0) {
                stack.push_back({std::min(u, w), std::max(u, w)});
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                dfs(w, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= depth[static_cast<std::size_t>(u)]) {
                    // u separates the component on top of the stack
                    uint32_t verts = 0;
                    std::vector<Edge> comp;
                    Edge top{std::min(u, w), std::max(u, w)};
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        comp.push_back(e);
                        verts |= (1u << e.u) | (1u << e.v);
                        if (e == top) break;
                    }
                    if (comp.size() == 1) {
                        out.bridge_edges.push_back(comp[0]);
                    } else {
                        std::vector<int> vs;
                        for (int v = 0; v < n; ++v)
                            if (verts & (1u << v)) vs.push_back(v);
                        out.block_vertices.push_back(std::move(vs));
                    }
                }
            } else if (depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(u)]) {
                stack.push_back({std::min(u, w), std::max(u, w)});
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], depth[static_cast<std::size_t>(w)]);
            }
        }
    };

    for (int v = 0; v < n; ++v) {
        if (depth[static_cast<std::size_t>(v)] < 0) {
            depth[static_cast<std::size_t>(v)] = 0;
            dfs(v, -1);
        }
    }
    std::sort(out.bridge_edges.begin(), out.bridge_edges.end());
    std::sort(out.block_vertices.begin(), out.block_vertices.end());
    return out;
}

}  // namespace detail

inline int cyclomatic_number(const Graph& g) {
    require_connected(g, "cyclomatic_number");
    return g.size() - g.order() + 1;
}

// Length of a shortest cycle; nullopt for forests.  A shortest cycle passes
// through some edge (u,v), where it closes a shortest u-v path avoiding that
// edge, so min over edges of d_{G-e}(u,v)+1 is exact.
inline std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    Graph h = g;
    for (const Edge& e : g.edges()) {
        h.remove_edge(e.u, e.v);
        int d = h.distances_from(e.u)[static_cast<std::size_t>(e.v)];
        h.add_edge(e.u, e.v);
        if (d >= 0 && (!best || d + 1 < *best)) best = d + 1;
    }
    return best;
}

// All cut edges (oriented) and all blocks (maximal 2-connected subgraphs on
// >= 3 vertices) of a connected graph.
inline std::pair<std::vector<Bridge>, std::vector<std::vector<int>>> bridges_and_blocks(
    const Graph& g) {
    require_connected(g, "bridges_and_blocks");
    auto decomp = detail::biconnected_components(g);

    std::vector<Bridge> bridges;
    bridges.reserve(decomp.bridge_edges.size());
    for (const Edge& e : decomp.bridge_edges) {
        // distance from each endpoint to the nearest block
        int du = -1, dv = -1;
        if (!decomp.block_vertices.empty()) {
            auto distu = g.distances_from(e.u);
            auto distv = g.distances_from(e.v);
            for (const auto& block : decomp.block_vertices) {
                for (int x : block) {
                    int a = distu[static_cast<std::size_t>(x)];
                    int b = distv[static_cast<std::size_t>(x)];
                    if (du < 0 || a < du) du = a;
                    if (dv < 0 || b < dv) dv = b;
                }
            }
        }
        Bridge br;
        if (du >= 0 && du != dv) {
            br.x = du < dv ? e.u : e.v;
            br.y = du < dv ? e.v : e.u;
        } else {
            br.x = e.u;  // tie (or no block at all): smaller id first
            br.y = e.v;
        }
        // internal iff both sides of the cut contain a block
        if (decomp.block_vertices.size() >= 2) {
            Graph cut = g;
            cut.remove_edge(e.u, e.v);
            uint32_t side = cut.component_mask(e.u);
            bool block_u = false, block_v = false;
            for (const auto& block : decomp.block_vertices) {
                bool on_u = (side >> block[0]) & 1u;
                (on_u ? block_u : block_v) = true;
            }
            br.internal = block_u && block_v;
        }
        bridges.push_back(br);
    }
    return {bridges, decomp.block_vertices};
}

struct ContractionResult {
    Graph graph;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    int merged_parallel_edges = 0;
    int dropped_loops = 0;
};

// Contract a set of edges; the quotient is simplified (parallels merged, loops
// dropped).  Classes are renumbered in order of their smallest member.
inline ContractionResult contract_edges(const Graph& g, const std::vector<Edge>& to_contract) {
    int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const Edge& e : to_contract) {
        if (!g.has_edge(e.u, e.v)) throw graph_error("contract_edges: edge not present");
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> new_id(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) new_id[static_cast<std::size_t>(v)] = next++;
    ContractionResult res;
    res.graph = Graph(next);
    res.vertex_map.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        res.vertex_map[static_cast<std::size_t>(v)] = new_id[static_cast<std::size_t>(find(v))];
    for (const Edge& e : g.edges()) {
        int a = res.vertex_map[static_cast<std::size_t>(e.u)];
        int b = res.vertex_map[static_cast<std::size_t>(e.v)];
        if (a == b) {
            ++res.dropped_loops;
        } else if (res.graph.has_edge(a, b)) {
            ++res.merged_parallel_edges;
        } else {
            res.graph.add_edge(a, b);
        }
    }
    // contracted edges themselves are expected loops, not "dropped" extras
    res.dropped_loops -= static_cast<int>(to_contract.size());
    return res;
}

struct PendantTree {
    std::vector<int> vertices;  // vertex set of T(v) in the original graph
    int leaf_count = 0;         // U(v): members that are leaves of G itself
};

struct StructureReport {
    std::vector<Bridge> bridges;
    std::vector<Bridge> internal_bridges;
    std::vector<std::vector<int>> blocks;
    int cyclomatic = 0;
    std::optional<int> girth;
    Graph basic;
    std::vector<int> contraction_map;        // vertex of G -> vertex of basic
    std::vector<PendantTree> pendant_forests;  // indexed by basic vertex

    int total_leaves() const {  // U(G)
        int s = 0;
        for (const auto& t : pendant_forests) s += t.leaf_count;
        return s;
    }
};

inline StructureReport structure_report(const Graph& g) {
    require_connected(g, "structure_report");
    StructureReport rep;
    auto [bridges, blocks] = bridges_and_blocks(g);
    rep.bridges = std::move(bridges);
    rep.blocks = std::move(blocks);
    for (const Bridge& b : rep.bridges)
        if (b.internal) rep.internal_bridges.push_back(b);
    rep.cyclomatic = cyclomatic_number(g);
    rep.girth = girth(g);

    std::vector<Edge> cut_edges;
    cut_edges.reserve(rep.bridges.size());
    for (const Bridge& b : rep.bridges)
        cut_edges.push_back({std::min(b.x, b.y), std::max(b.x, b.y)});
    auto contraction = contract_edges(g, cut_edges);
    rep.basic = std::move(contraction.graph);
    rep.contraction_map = std::move(contraction.vertex_map);

    rep.pendant_forests.assign(static_cast<std::size_t>(rep.basic.order()), {});
    for (int v = 0; v < g.order(); ++v) {
        auto& t = rep.pendant_forests[static_cast<std::size_t>(
            rep.contraction_map[static_cast<std::size_t>(v)])];
        t.vertices.push_back(v);
        if (g.degree(v) == 1) ++t.leaf_count;
    }
    return rep;
}

}  // namespace rainbow
