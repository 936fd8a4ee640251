// Extract recipe-shaped tables from solver witnesses for cases whose claimed
// tables are invalid, and re-validate everything.
#include <iostream>

#include "rainbow/enumerate.hpp"
#include "rainbow/recipes.hpp"

using namespace rainbow;

static void extract(const std::string& id, const std::vector<RecipeCondition>& conds) {
    const Graph& base = catalog_entry(id).graph;
    int extra = 0;
    for (const auto& c : conds) extra += c.min_sum;
    Graph w(base.order() + extra);
    for (const Edge& e : base.edges()) w.add_edge(e.u, e.v);
    int next = base.order();
    for (const auto& c : conds)
        for (int i = 0; i < c.min_sum; ++i) w.add_edge(c.vertices.front(), next++);
    auto rep = structure_report(w);
    auto r = rx_exact(w, 3);
    std::cout << id << " witness n=" << w.order() << " rx3=" << *r.value
              << " (n-3=" << w.order() - 3 << ")\n";
    // rename colors so cut edges carry 1..s in bridge order
    int s = static_cast<int>(rep.bridges.size());
    std::vector<int> rename(static_cast<std::size_t>(r.witness->q + 1), 0);
    int nextc = 0;
    for (const Bridge& b : rep.bridges) {
        int c = r.witness->colors[static_cast<std::size_t>(w.edge_index(b.x, b.y))];
        if (!rename[static_cast<std::size_t>(c)]) rename[static_cast<std::size_t>(c)] = ++nextc;
    }
    // remaining colors -> a1, a2, ... in order of appearance on basic edges
    std::cout << "  bridge colors:";
    for (const Bridge& b : rep.bridges)
        std::cout << " (" << b.x << "," << b.y << ")="
                  << rename[static_cast<std::size_t>(
                         r.witness->colors[static_cast<std::size_t>(w.edge_index(b.x, b.y))])];
    std::cout << "\n  base seq (entry lex order): {";
    int fresh = 0;
    std::vector<int> fresh_name(static_cast<std::size_t>(r.witness->q + 1), 0);
    for (const Edge& e : base.edges()) {
        int c = r.witness->colors[static_cast<std::size_t>(w.edge_index(e.u, e.v))];
        int rn = rename[static_cast<std::size_t>(c)];
        if (rn) {
            std::cout << rn << ", ";
        } else {
            if (!fresh_name[static_cast<std::size_t>(c)]) fresh_name[static_cast<std::size_t>(c)] = ++fresh;
            std::cout << -fresh_name[static_cast<std::size_t>(c)] << ", ";
        }
    }
    std::cout << "}  (s=" << s << ", fresh=" << fresh << ")\n";
}

int main() {
    extract("G4", {{{0}, 3}});
    extract("G6", {{{1}, 1}});
    return 0;
}
