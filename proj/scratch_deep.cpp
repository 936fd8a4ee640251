#include <iostream>

#include "rainbow/catalog.hpp"
#include "rainbow/oracle.hpp"

using namespace rainbow;

static void inspect(const char* g6) {
    Graph g = parse_graph6(g6);
    std::cout << "== " << g6 << " n=" << g.order() << " m=" << g.size() << "\nedges:";
    for (const Edge& e : g.edges()) std::cout << " (" << e.u << "," << e.v << ")";
    auto rep = structure_report(g);
    std::cout << "\nU per basic vertex:";
    for (const auto& t : rep.pendant_forests) std::cout << " " << t.leaf_count;
    std::cout << "\nbasic edges:";
    for (const Edge& e : rep.basic.edges()) std::cout << " (" << e.u << "," << e.v << ")";
    auto r = rx_exact(g, 3);
    std::cout << "\nsolver rx3 = " << *r.value;
    int oracle = rx_naive_oracle(g, 3);
    std::cout << ", naive oracle rx3 = " << oracle << "\n";
}

int main() {
    inspect("GxKG[?");  // H1 + pendant, solver says n-2
    inspect("G~`@?_");  // H8 + pendants, solver says n-3

    // Map the H1 pendant position back to the H1 labels: which vertex?
    Graph g = parse_graph6("GxKG[?");
    auto rep = structure_report(g);
    auto isos = match_basic(rep.basic, catalog_entry("H1"));
    for (const auto& iso : isos) {
        std::vector<int> u(7, 0);
        for (int b = 0; b < 7; ++b) u[iso[b]] = rep.pendant_forests[b].leaf_count;
        std::cout << "H1-label U:";
        for (int x : u) std::cout << " " << x;
        std::cout << "\n";
    }

    // And the H8 pattern:
    Graph h = parse_graph6("G~`@?_");
    auto reph = structure_report(h);
    auto isosh = match_basic(reph.basic, catalog_entry("H8"));
    std::cout << "H8-label U:";
    for (int b = 0; b < 4; ++b) std::cout << " " << reph.pendant_forests[b].leaf_count;
    std::cout << " (isos " << isosh.size() << ")\n";

    // Exhaustive truth table for H1 + one pendant at each vertex
    const Graph& h1 = catalog_entry("H1").graph;
    for (int at = 0; at < 7; ++at) {
        Graph x(8);
        for (const Edge& e : h1.edges()) x.add_edge(e.u, e.v);
        x.add_edge(at, 7);
        auto rr = rx_exact(x, 3);
        std::cout << "H1 + pendant at v" << at + 1 << " (0-based " << at << "): rx3 = "
                  << *rr.value << "\n";
    }
    // K4 + one pendant leaf at each of the four vertices
    {
        Graph x(8);
        for (const Edge& e : catalog_entry("H8").graph.edges()) x.add_edge(e.u, e.v);
        for (int i = 0; i < 4; ++i) x.add_edge(i, 4 + i);
        auto rr = rx_exact(x, 3);
        std::cout << "K4 + 4 pendant leaves: rx3 = " << *rr.value << " (n-2=6)\n";
    }
    return 0;
}
