#include <cassert>
#include <iostream>

#include "rainbow/graph.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/steiner.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

int main() {
    // graph6
    Graph star = parse_graph6("D?{");
    assert(star.order() == 5 && star.size() == 4);
    assert(star.has_edge(0, 4) && star.has_edge(1, 4) && star.has_edge(2, 4) && star.has_edge(3, 4));
    assert(parse_graph6("A_") == path_graph(2));
    assert(parse_graph6("Bw") == complete_graph(3));
    assert(to_graph6(Graph(1)) == "@");
    assert(to_graph6(path_graph(2)) == "A_");
    assert(to_graph6(complete_graph(3)) == "Bw");
    assert(parse_graph6(to_graph6(star)) == star);
    std::cout << "graph6 ok\n";

    // structure
    Graph c5 = cycle_graph(5);
    auto [b1, bl1] = bridges_and_blocks(c5);
    assert(b1.empty() && bl1.size() == 1 && bl1[0].size() == 5);
    auto [b2, bl2] = bridges_and_blocks(path_graph(4));
    assert(b2.size() == 3 && bl2.empty());
    // tadpole: triangle 0,1,2 + pendant edge at 0
    Graph tad(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto [b3, bl3] = bridges_and_blocks(tad);
    assert(b3.size() == 1 && b3[0].x == 0 && b3[0].y == 3 && !b3[0].internal);
    assert(bl3.size() == 1);
    assert(cyclomatic_number(complete_graph(4)) == 3);
    assert(girth(path_graph(4)) == std::nullopt);
    assert(girth(cycle_graph(5)) == 5);
    auto rep = structure_report(tad);
    assert(rep.basic == complete_graph(3));
    assert(rep.pendant_forests[0].leaf_count == 1);
    // tree: basic K1
    auto rep2 = structure_report(star_graph(4));
    assert(rep2.basic.order() == 1 && rep2.pendant_forests[0].leaf_count == 4);
    // two triangles joined by a bridge: U of merged class must be 0
    Graph bow(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    auto rep3 = structure_report(bow);
    assert(rep3.basic.order() == 5);
    assert(rep3.total_leaves() == 0);
    std::cout << "structure ok\n";

    // steiner
    assert(steiner_distance(complete_graph(4), {0, 1, 2}) == 2);
    assert(steiner_distance(path_graph(4), {0, 3}) == 3);
    assert(steiner_diameter(path_graph(5), 3) == 4);
    assert(steiner_diameter(cycle_graph(6), 3) == 4);
    auto trees = enumerate_trees(SteinerQuery(cycle_graph(4), {0, 1, 2}, 3));
    std::cout << "C4 minimal trees for {0,1,2}: " << trees.size() << "\n";
    assert(trees.size() == 3);
    assert(enumerate_trees(SteinerQuery(complete_graph(3), {0, 1, 2})).size() == 3);
    std::cout << "steiner ok\n";

    // solver point values
    auto check_rx = [](const Graph& g, int k, int want) {
        auto r = rx_exact(g, k);
        if (!r.value || *r.value != want) {
            std::cout << "rx mismatch: got " << (r.value ? *r.value : -1) << " want " << want
                      << "\n";
            std::abort();
        }
    };
    check_rx(complete_graph(5), 3, 2);
    Graph k5e = complete_graph(5);
    k5e.remove_edge(0, 1);
    check_rx(k5e, 3, 3);
    check_rx(complete_graph(4), 3, 2);
    check_rx(cycle_graph(4), 3, 2);
    check_rx(cycle_graph(6), 3, 4);
    check_rx(cycle_graph(5), 3, 3);
    check_rx(star_graph(4), 3, 4);
    check_rx(path_graph(5), 3, 4);
    check_rx(cycle_graph(4), 4, 3);
    check_rx(complete_graph(3), 3, 2);
    std::cout << "solver point values ok\n";

    // oracle agreement on a few
    assert(rx_naive_oracle(complete_graph(3), 3) == 2);
    assert(rx_naive_oracle(path_graph(3), 3) == 2);
    assert(rx_naive_oracle(cycle_graph(4), 4) == 3);
    assert(rx_naive_oracle(cycle_graph(5), 3) == 3);
    assert(rx_naive_oracle(cycle_graph(6), 3) == 4);
    std::cout << "oracle ok\n";

    // decision examples
    assert(!rx_decision(cycle_graph(4), 3, 1));
    assert(rx_decision(cycle_graph(4), 3, 2));
    assert(!rx_decision(path_graph(4), 3, 2));
    std::cout << "decision ok\n";
    std::cout << "ALL SMOKE OK\n";
    return 0;
}
