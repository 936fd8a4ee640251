#include <iostream>

#include "rainbow/recipes.hpp"

using namespace rainbow;

int main() {
    // H5 + leaf at hub vertex 1; delete chord (1,3) by hand and drive the rest
    const Graph& h5 = catalog_entry("H5").graph;
    Graph w(7);
    for (const Edge& e : h5.edges()) w.add_edge(e.u, e.v);
    w.add_edge(1, 6);
    Graph h = w;
    h.remove_edge(1, 3);
    std::cout << "after delete: connected=" << h.is_connected() << "\n";
    auto rep = structure_report(h);
    std::cout << "cyclomatic=" << rep.cyclomatic << " basic order=" << rep.basic.order()
              << " edges:";
    for (const Edge& e : rep.basic.edges()) std::cout << " (" << e.u << "," << e.v << ")";
    std::cout << "\nU:";
    for (const auto& t : rep.pendant_forests) std::cout << " " << t.leaf_count;
    std::cout << "\n";
    const CatalogEntry& g6 = catalog_entry("G6");
    auto isos = match_basic(rep.basic, g6);
    std::cout << "isos to G6: " << isos.size() << "\n";
    for (const CatalogEntry& e : catalog()) {
        if (e.cyclomatic() == 2 && e.graph.order() == 6) {
            std::cout << "candidate entry " << e.id << ": isos "
                      << match_basic(rep.basic, e).size() << "\n";
        }
    }
    auto sub = recipe_coloring(h);
    std::cout << "recipe_coloring on reduced graph: " << (sub ? "found" : "NONE");
    if (sub) std::cout << " q=" << sub->q;
    std::cout << "\n";
    auto full = recipe_coloring(w);
    std::cout << "recipe_coloring on witness: " << (full ? "found" : "NONE") << "\n";
    return 0;
}
