// Edge colorings, rainbow-tree verification, and the cut/non-cut color
// analysis used by the extremal classifier.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/graph.hpp"
#include "rainbow/steiner.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

// Colors are 1..q, indexed by lexicographic edge position.
struct Coloring {
    int n = 0, m = 0;            // graph identity
    int q = 0;                   // palette size
    std::vector<int> colors;     // size m

    int distinct_used() const {
        std::set<int> s(colors.begin(), colors.end());
        return static_cast<int>(s.size());
    }
};

inline void check_coloring(const Graph& g, const Coloring& c) {
    if (c.n != g.order() || c.m != g.size() || static_cast<int>(c.colors.size()) != g.size())
        throw graph_error("coloring does not match graph size");
    for (int col : c.colors)
        if (col < 1 || col > c.q) throw graph_error("edge color outside 1..q");
    if (c.q < c.distinct_used()) throw graph_error("palette smaller than distinct colors used");
}

inline Coloring make_coloring(const Graph& g, int q, std::vector<int> colors) {
    Coloring c{g.order(), g.size(), q, std::move(colors)};
    check_coloring(g, c);
    return c;
}

// ---------------------------------------------------------------------------
// JSON file format: { "colors": [...], "graph6": "...", "q": int }

inline nlohmann::json coloring_to_json(const Graph& g, const Coloring& c) {
    check_coloring(g, c);
    return nlohmann::json{{"graph6", to_graph6(g)}, {"q", c.q}, {"colors", c.colors}};
}

inline std::pair<Graph, Coloring> coloring_from_json(const nlohmann::json& j) {
    Graph g = parse_graph6(j.at("graph6").get<std::string>());
    Coloring c;
    c.n = g.order();
    c.m = g.size();
    c.q = j.at("q").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
    check_coloring(g, c);
    return {g, c};
}

// ---------------------------------------------------------------------------
// Rainbow verification

// Some minimal tree connecting S whose edges carry pairwise distinct colors.
inline std::optional<std::vector<Edge>> has_rainbow_tree(const Graph& g, const Coloring& c,
                                                         const std::vector<int>& terminals) {
    check_coloring(g, c);
    // a rainbow tree has at most q edges
    SteinerQuery q(g, terminals, std::min(g.order() - 1, c.q));
    std::optional<EdgeMask> found;
    detail::for_each_minimal_tree(q, [&](EdgeMask tree, int) {
        uint64_t seen = 0;
        EdgeMask t = tree;
        while (t) {
            int i = __builtin_ctz(t);
            t &= t - 1;
            uint64_t bit = 1ull << c.colors[static_cast<std::size_t>(i)];
            if (seen & bit) return true;  // repeated color; keep scanning
            seen |= bit;
        }
        found = tree;
        return false;
    });
    if (!found) return std::nullopt;
    std::vector<Edge> tree_edges;
    EdgeMask t = *found;
    while (t) {
        int i = __builtin_ctz(t);
        t &= t - 1;
        tree_edges.push_back(g.edges()[static_cast<std::size_t>(i)]);
    }
    return tree_edges;
}

struct RainbowVerdict {
    bool ok = false;
    std::optional<std::vector<int>> failing_set;  // lexicographically least failing S
    std::map<std::vector<int>, std::vector<Edge>> witness_trees;  // filled on request
};

// ok iff every k-subset of vertices has a rainbow tree.
inline RainbowVerdict is_k_rainbow(const Graph& g, const Coloring& c, int k,
                                   bool collect_witnesses = false) {
    check_coloring(g, c);
    require_connected(g, "is_k_rainbow");
    if (k < 2 || k > g.order()) throw graph_error("is_k_rainbow: k out of range");
    RainbowVerdict verdict;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            auto tree = has_rainbow_tree(g, c, subset);
            if (!tree) {
                verdict.failing_set = subset;
                return false;
            }
            if (collect_witnesses) verdict.witness_trees[subset] = *tree;
            return true;
        }
        for (int v = start; v < g.order(); ++v) {
            subset[static_cast<std::size_t>(depth)] = v;
            if (!rec(v + 1, depth + 1)) return false;
        }
        return true;
    };
    verdict.ok = rec(0, 0);
    return verdict;
}

// ---------------------------------------------------------------------------
// Cut/non-cut color analysis

struct ColoringAnalysis {
    std::set<int> noncut_colors;  // A1
    std::set<int> cut_colors;     // A2
    int overlap = 0;              // p = |A1 ∩ A2|
    std::vector<int> tree_noncut_colors;  // W(v) per basic vertex: |c(T(v)) ∩ A1|
};

inline ColoringAnalysis analyze_coloring(const Graph& g, const Coloring& c) {
    check_coloring(g, c);
    StructureReport rep = structure_report(g);
    ColoringAnalysis a;
    std::vector<bool> is_cut(static_cast<std::size_t>(g.size()), false);
    for (const Bridge& b : rep.bridges) {
        int idx = g.edge_index(b.x, b.y);
        is_cut[static_cast<std::size_t>(idx)] = true;
    }
    for (int i = 0; i < g.size(); ++i)
        (is_cut[static_cast<std::size_t>(i)] ? a.cut_colors : a.noncut_colors)
            .insert(c.colors[static_cast<std::size_t>(i)]);
    for (int col : a.cut_colors)
        if (a.noncut_colors.count(col)) ++a.overlap;

    a.tree_noncut_colors.assign(static_cast<std::size_t>(rep.basic.order()), 0);
    for (int bv = 0; bv < rep.basic.order(); ++bv) {
        const auto& tv = rep.pendant_forests[static_cast<std::size_t>(bv)].vertices;
        std::set<int> tree_colors;
        for (std::size_t ai = 0; ai < tv.size(); ++ai)
            for (std::size_t bi = ai + 1; bi < tv.size(); ++bi) {
                int idx = g.edge_index(tv[ai], tv[bi]);
                if (idx >= 0) tree_colors.insert(c.colors[static_cast<std::size_t>(idx)]);
            }
        int w = 0;
        for (int col : tree_colors)
            if (a.noncut_colors.count(col)) ++w;
        a.tree_noncut_colors[static_cast<std::size_t>(bv)] = w;
    }
    return a;
}

}  // namespace rainbow
