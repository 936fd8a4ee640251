#include <iostream>

#include "rainbow/catalog.hpp"

using namespace rainbow;

int main() {
    Graph g = parse_graph6("F?o}W");
    std::cout << "n=" << g.order() << " m=" << g.size() << " edges:";
    for (const Edge& e : g.edges()) std::cout << " (" << e.u << "," << e.v << ")";
    std::cout << "\n";
    auto rep = structure_report(g);
    std::cout << "cyclomatic=" << rep.cyclomatic << " basic n=" << rep.basic.order()
              << " m=" << rep.basic.size() << "\nbasic edges:";
    for (const Edge& e : rep.basic.edges()) std::cout << " (" << e.u << "," << e.v << ")";
    std::cout << "\ncontraction map:";
    for (int v = 0; v < g.order(); ++v) std::cout << " " << rep.contraction_map[v];
    std::cout << "\nU per basic vertex:";
    for (const auto& t : rep.pendant_forests) std::cout << " " << t.leaf_count;
    std::cout << "\nbridges:";
    for (const auto& b : rep.bridges) std::cout << " (" << b.x << "," << b.y << ")";
    std::cout << "\n";
    const CatalogEntry& h4 = catalog_entry("H4");
    auto isos = match_basic(rep.basic, h4);
    std::cout << "isos to H4: " << isos.size() << "\n";
    for (const auto& iso : isos) {
        std::vector<int> u(5, 0);
        for (int b = 0; b < rep.basic.order(); ++b)
            u[iso[b]] = rep.pendant_forests[b].leaf_count;
        std::cout << "  U on H4 labels (v1..v5):";
        for (int x : u) std::cout << " " << x;
        std::cout << (check_constraints(rep, h4, iso) ? "  OK" : "  violated") << "\n";
    }
    auto r = rx_exact(g, 3);
    std::cout << "rx3 = " << *r.value << " (n-2 = " << g.order() - 2 << ")\n";
    return 0;
}
