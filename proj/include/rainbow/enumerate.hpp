// Exhaustive small-graph enumeration, one representative per isomorphism
// class, plus an independent naive enumerator used to cross-check it and a
// seeded random-graph source for property tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/iso.hpp"

namespace rainbow {

// All graphs of the given order up to isomorphism (connected or not),
// generated by extending every (n-1)-vertex graph with one vertex and every
// possible neighborhood, deduplicated by canonical key.
inline std::vector<Graph> enumerate_all_graphs(int n) {
    if (n < 1 || n > 8) throw graph_error("enumerate_all_graphs: supported range is 1..8");
    std::map<uint64_t, Graph> level;
    level.emplace(canonical_key(Graph(1)), Graph(1));
    for (int k = 2; k <= n; ++k) {
        std::map<uint64_t, Graph> next;
        for (const auto& [key, h] : level) {
            (void)key;
            for (uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                Graph g(k);
                for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
                for (int v = 0; v < k - 1; ++v)
                    if ((nb >> v) & 1u) g.add_edge(v, k - 1);
                uint64_t gk = canonical_key(g);
                next.emplace(gk, std::move(g));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [key, g] : level) {
        (void)key;
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return to_graph6(a) < to_graph6(b);
    });
    return out;
}

// One representative per isomorphism class of connected graphs of order n,
// in a deterministic (edge count, then graph6) order.
inline std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for (Graph& g : enumerate_all_graphs(n))
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

// Independent cross-check path: run through every edge subset of K_n and
// deduplicate with pairwise isomorphism tests (no canonical keys involved).
inline std::vector<Graph> naive_enumerate_connected(int n) {
    if (n < 1 || n > 6) throw graph_error("naive_enumerate_connected: supported range is 1..6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    // bucket representatives by sorted degree sequence to keep comparisons few
    std::map<std::vector<int>, std::vector<Graph>> buckets;
    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u) g.add_edge(pairs[i].first, pairs[i].second);
        if (!g.is_connected()) continue;
        std::vector<int> sig;
        sig.push_back(g.size());
        for (int v = 0; v < n; ++v) sig.push_back(g.degree(v));
        std::sort(sig.begin() + 1, sig.end());
        auto& bucket = buckets[sig];
        bool fresh = std::none_of(bucket.begin(), bucket.end(),
                                  [&](const Graph& h) { return is_isomorphic(g, h); });
        if (fresh) {
            bucket.push_back(g);
            out.push_back(std::move(g));
        }
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return to_graph6(a) < to_graph6(b);
    });
    return out;
}

// Seeded random connected graph: G(n, p) conditioned on connectivity.
inline Graph random_connected_graph(int n, double edge_prob, std::mt19937& rng) {
    std::bernoulli_distribution coin(edge_prob);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) g.add_edge(i, j);
        if (g.is_connected()) return g;
    }
    // p too small to hit a connected sample; fall back to a random tree + noise
    Graph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> prev(0, v - 1);
        g.add_edge(v, prev(rng));
    }
    return g;
}

}  // namespace rainbow
