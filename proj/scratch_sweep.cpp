#include <chrono>
#include <iostream>

#include "rainbow/catalog.hpp"
#include "rainbow/enumerate.hpp"

using namespace rainbow;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 6;
    auto graphs = enumerate_connected(n);
    std::cout << "order " << n << ": " << graphs.size() << " graphs\n";
    auto t0 = Clock::now();
    int mismatches = 0;
    uint64_t total_nodes = 0;
    int buckets[4] = {0, 0, 0, 0};
    for (const Graph& g : graphs) {
        ClassLabel label = classify_rx3(g);
        auto r = rx_exact(g, 3);
        total_nodes += r.stats.nodes;
        ++buckets[static_cast<int>(label.bucket)];
        if (!r.value) {
            std::cout << "BUDGET " << to_graph6(g) << "\n";
            ++mismatches;
            continue;
        }
        if (!label.consistent_with(*r.value, n)) {
            ++mismatches;
            std::cout << "MISMATCH " << to_graph6(g) << " rx3=" << *r.value << " m=" << g.size()
                      << " label=" << label.describe() << "\n";
        }
    }
    auto dt = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "mismatches=" << mismatches << " nodes=" << total_nodes << " time=" << dt
              << "s\n";
    std::cout << "buckets: exact=" << buckets[0] << " n-1=" << buckets[1]
              << " n-2=" << buckets[2] << " <=n-3=" << buckets[3] << "\n";
    return mismatches != 0;
}
