#include <iostream>

#include "rainbow/enumerate.hpp"
#include "rainbow/recipes.hpp"

using namespace rainbow;

// Minimal violating witness: entry graph + min_sum pendant leaves at the first
// vertex of each condition set.
static Graph minimal_witness(const ColoringRecipe& r) {
    const Graph& base = catalog_entry(r.basic_id).graph;
    int extra = 0;
    for (const auto& c : r.conditions) extra += c.min_sum;
    Graph g(base.order() + extra);
    for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
    int next = base.order();
    for (const auto& c : r.conditions)
        for (int i = 0; i < c.min_sum; ++i) g.add_edge(c.vertices.front(), next++);
    return g;
}

int main() {
    int fails = 0;
    // 1. every encoded recipe verifies on its minimal witness with n-3 colors
    for (const auto& r : recipe_table()) {
        Graph w = minimal_witness(r);
        try {
            Coloring c = table_coloring(w, r);
            bool ok = c.q == w.order() - 3 && is_k_rainbow(w, c, 3).ok;
            std::cout << (ok ? "PASS " : "FAIL ") << r.basic_id << " / " << r.case_id
                      << "  (n=" << w.order() << ", q=" << c.q << ")\n";
            fails += !ok;
        } catch (const std::exception& ex) {
            std::cout << "FAIL " << r.basic_id << " / " << r.case_id << ": " << ex.what() << "\n";
            ++fails;
        }
    }

    // 2. recipe completeness at n=6,7: every constraint-violating graph whose
    // basic matches an entry gets an (n-3)-coloring from recipes alone or the
    // solver; count recipe coverage.
    for (int n = 6; n <= 7; ++n) {
        int total = 0, by_recipe = 0;
        for (const Graph& g : enumerate_connected(n)) {
            ClassLabel label = classify_rx3(g);
            if (label.reason != ClassReason::ConstraintViolation) continue;
            ++total;
            auto c = recipe_coloring(g);
            if (c) {
                ++by_recipe;
                if (c->q != n - 3 || !is_k_rainbow(g, *c, 3).ok) {
                    std::cout << "BAD recipe coloring for " << to_graph6(g) << "\n";
                    ++fails;
                }
            } else {
                auto r = rx_exact(g, 3);
                if (*r.value > n - 3) {
                    std::cout << "INCONSISTENT: " << to_graph6(g) << " violated but rx3 > n-3\n";
                    ++fails;
                }
                std::cout << "  solver fallback: " << to_graph6(g) << " (basic "
                          << label.entry_id << ")\n";
            }
        }
        std::cout << "n=" << n << ": violated-with-match " << total << ", recipe-covered "
                  << by_recipe << "\n";
    }

    // 3. partition bound on every connected graph n<=7
    for (int n = 3; n <= 7; ++n) {
        int built = 0, trivial = 0;
        for (const Graph& g : enumerate_connected(n)) {
            auto pb = partition_upper_bound(g);
            if (pb.coloring) {
                ++built;
                if (pb.coloring->q > n - 2 || !is_k_rainbow(g, *pb.coloring, 3).ok) {
                    std::cout << "BAD partition coloring " << to_graph6(g) << "\n";
                    ++fails;
                }
            } else {
                ++trivial;
                auto rep = structure_report(g);
                bool expect = rep.cyclomatic == 0 || (rep.cyclomatic == 1 && rep.girth == 3);
                if (!expect) {
                    std::cout << "partition bound missing for " << to_graph6(g) << "\n";
                    ++fails;
                }
            }
        }
        std::cout << "partition n=" << n << ": built " << built << ", n-1-only " << trivial
                  << "\n";
    }
    std::cout << (fails ? "FAILURES: " : "ALL OK, failures: ") << fails << "\n";
    return fails != 0;
}
