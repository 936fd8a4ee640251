#include <iostream>

#include "rainbow/recipes.hpp"

using namespace rainbow;

int main() {
    // G4 witness: K4-e + three leaves at vertex 0
    const Graph& g4 = catalog_entry("G4").graph;
    Graph w(7);
    for (const Edge& e : g4.edges()) w.add_edge(e.u, e.v);
    w.add_edge(0, 4);
    w.add_edge(0, 5);
    w.add_edge(0, 6);
    auto rep = structure_report(w);
    std::cout << "bridges:";
    for (auto& b : rep.bridges) std::cout << " (" << b.x << "," << b.y << ")";
    std::cout << "\nbasic edges:";
    for (const Edge& e : rep.basic.edges()) std::cout << " (" << e.u << "," << e.v << ")";
    std::cout << "\nU:";
    for (auto& t : rep.pendant_forests) std::cout << " " << t.leaf_count;
    const CatalogEntry& entry = catalog_entry("G4");
    auto isos = match_basic(rep.basic, entry);
    std::cout << "\nisos: " << isos.size() << "\n";
    const ColoringRecipe* recipe = nullptr;
    for (const auto& r : recipe_table())
        if (r.basic_id == "G4") recipe = &r;
    for (const auto& iso : isos) {
        if (!detail::conditions_hold(*recipe, rep, iso)) {
            std::cout << "iso skipped (conditions)\n";
            continue;
        }
        Coloring c = detail::instantiate_table(w, rep, entry, iso, *recipe);
        std::cout << "iso [";
        for (int x : iso) std::cout << x << " ";
        std::cout << "] colors:";
        for (std::size_t i = 0; i < c.colors.size(); ++i) {
            const Edge& e = w.edges()[i];
            std::cout << " (" << e.u << "," << e.v << ")=" << c.colors[i];
        }
        auto verdict = is_k_rainbow(w, c, 3);
        std::cout << " q=" << c.q << (verdict.ok ? "  VALID" : "  INVALID at S={");
        if (!verdict.ok) {
            for (int v : *verdict.failing_set) std::cout << v << " ";
            std::cout << "}";
        }
        std::cout << "\n";
    }
    return 0;
}
