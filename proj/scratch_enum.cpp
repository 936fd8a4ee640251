#include <chrono>
#include <iostream>

#include "rainbow/enumerate.hpp"

using namespace rainbow;
using Clock = std::chrono::steady_clock;

int main() {
    for (int n = 1; n <= 8; ++n) {
        auto t0 = Clock::now();
        auto all = enumerate_all_graphs(n);
        int connected = 0;
        for (const auto& g : all) connected += g.is_connected();
        auto dt = std::chrono::duration<double>(Clock::now() - t0).count();
        std::cout << "n=" << n << " all=" << all.size() << " connected=" << connected
                  << "  (" << dt << "s)\n";
    }
    for (int n = 1; n <= 6; ++n) {
        auto naive = naive_enumerate_connected(n);
        std::cout << "naive n=" << n << " connected=" << naive.size() << "\n";
    }
    return 0;
}
