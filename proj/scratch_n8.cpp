// Stress the catalog constraint semantics on pendant patterns only reachable
// at order 8: attach every pendant forest with up to (8 - order) extra
// vertices to every catalog entry, classify, solve, compare.
#include <chrono>
#include <iostream>
#include <map>

#include "rainbow/catalog.hpp"
#include "rainbow/enumerate.hpp"

using namespace rainbow;

int main() {
    int mismatches = 0, total = 0;
    uint64_t nodes = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const CatalogEntry& e : catalog()) {
        if (e.requires_bare) continue;
        int base = e.graph.order();
        std::map<uint64_t, Graph> seen;
        // BFS over attachment sequences: each level adds one vertex attached
        // to any existing vertex.
        std::vector<Graph> frontier = {e.graph};
        for (int extra = 1; base + extra <= 8; ++extra) {
            std::vector<Graph> next;
            for (const Graph& h : frontier) {
                for (int at = 0; at < h.order(); ++at) {
                    Graph g(h.order() + 1);
                    for (const Edge& ed : h.edges()) g.add_edge(ed.u, ed.v);
                    g.add_edge(at, h.order());
                    uint64_t key = canonical_key(g);
                    if (seen.emplace(key, g).second) next.push_back(g);
                }
            }
            for (const Graph& g : next) {
                ++total;
                ClassLabel label = classify_rx3(g);
                auto r = rx_exact(g, 3);
                nodes += r.stats.nodes;
                if (!r.value || !label.consistent_with(*r.value, g.order())) {
                    ++mismatches;
                    std::cout << "MISMATCH entry=" << e.id << " g6=" << to_graph6(g)
                              << " rx3=" << (r.value ? *r.value : -1)
                              << " label=" << label.describe() << "\n";
                }
            }
            frontier = std::move(next);
        }
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "pendant-pattern graphs tested: " << total << ", mismatches: " << mismatches
              << ", nodes=" << nodes << ", " << dt << "s\n";

    // H1 with one subdivided... rather: chain of three triangles joined by
    // internal paths keeps U(G)=0 and must stay in class at order 8.
    {
        // triangles {0,1,2},{3,4,5} joined 2-3, plus triangle {5,6,7} sharing 5
        Graph g(8, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
        ClassLabel label = classify_rx3(g);
        auto r = rx_exact(g, 3);
        std::cout << "H1 with internal bridge: rx3=" << *r.value << " label=" << label.describe()
                  << (label.consistent_with(*r.value, 8) ? "  OK" : "  MISMATCH") << "\n";
        if (!label.consistent_with(*r.value, 8)) ++mismatches;
    }
    return mismatches != 0;
}
