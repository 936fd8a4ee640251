#include <iostream>

#include "rainbow/catalog.hpp"

using namespace rainbow;

static void probe(const std::string& id, const std::vector<int>& pendants_at, int expect_rel) {
    const Graph& base = catalog_entry(id).graph;
    Graph g(base.order() + static_cast<int>(pendants_at.size()));
    for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
    int next = base.order();
    for (int at : pendants_at) g.add_edge(at, next++);
    auto r = rx_exact(g, 3);
    ClassLabel label = classify_rx3(g);
    int n = g.order();
    std::cout << id << " pendants at {";
    for (int at : pendants_at) std::cout << " v" << at + 1;
    std::cout << " }: n=" << n << " rx3=" << *r.value << " want n-" << expect_rel << "="
              << n - expect_rel << " classifier: " << label.describe()
              << ((label.consistent_with(*r.value, n) && *r.value == n - expect_rel) ? "  OK"
                                                                                     : "  PROBLEM")
              << "\n";
}

int main() {
    // H5 allows one pendant leaf at each odd rim vertex
    probe("H5", {0, 2, 4}, 2);
    // G3 = K_{2,3}: two leaves at each part-of-two vertex (nonadjacent pair is
    // unconstrained)
    probe("G3", {0, 0, 4, 4}, 2);
    // G2 deeper: two leaves at the C4 vertex opposite the shared vertex
    probe("G2", {4, 4}, 2);
    // G2 violation at distance: U(v3)=1, U(v4)=1
    probe("G2", {2, 3}, 3);
    // G1 free vertices: three leaves at v1
    probe("G1", {0, 0, 0}, 2);
    return 0;
}
