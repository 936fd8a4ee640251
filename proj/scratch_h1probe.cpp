// Probe the true pendant-tolerance of the three-triangle chain at order 9,
// and double-check the claimed coloring tables against the verifier.
#include <chrono>
#include <iostream>

#include "rainbow/catalog.hpp"

using namespace rainbow;

static void probe(const std::vector<std::pair<int, int>>& pendants, const char* name) {
    const Graph& h1 = catalog_entry("H1").graph;
    int extra = 0;
    for (auto [at, chain] : pendants) extra += chain;
    Graph g(7 + extra);
    for (const Edge& e : h1.edges()) g.add_edge(e.u, e.v);
    int next = 7;
    for (auto [at, chain] : pendants) {
        int prev = at;
        for (int i = 0; i < chain; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    auto t0 = std::chrono::steady_clock::now();
    auto r = rx_exact(g, 3, {.max_nodes = 4'000'000'000ull});
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << name << ": n=" << g.order() << " rx3 = "
              << (r.value ? std::to_string(*r.value) : "unknown") << "  (n-2 = " << g.order() - 2
              << ", nodes=" << r.stats.nodes << ", " << dt << "s)\n";
}

int main() {
    probe({{0, 1}, {0, 1}}, "U(v1)=2          ");   // two leaves at v1  -> n=9
    probe({{0, 1}, {1, 1}}, "U(v1)=U(v2)=1    ");   // same outer triangle
    probe({{0, 1}, {5, 1}}, "U(v1)=U(v6)=1    ");   // opposite ends
    probe({{1, 1}, {6, 1}}, "U(v2)=U(v7)=1    ");
    probe({{0, 2}}, "U(v1)=1 (2-path) ");            // longer pendant tree, n=9
    return 0;
}
