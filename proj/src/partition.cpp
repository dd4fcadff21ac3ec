#include "moonshine/partition.hpp"

namespace moonshine {

PartitionTable partition_numbers(std::size_t n) {
    std::vector<Int> p(n + 1);
    p[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Int acc(0);
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const std::size_t g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                acc += p[m - g1];
                if (g2 <= m) acc += p[m - g2];
            } else {
                acc -= p[m - g1];
                if (g2 <= m) acc -= p[m - g2];
            }
        }
        p[m] = acc;
    }
    return PartitionTable{std::move(p)};
}

}  // namespace moonshine
