#pragma once

// Test-only oracles, kept deliberately independent of the library's own
// computation paths: partition counts by bounded-part counting (not the
// pentagonal recurrence), the Euler product by literal factor-by-factor
// expansion (not the pentagonal theorem), and divisor power sums by trial
// division (not a sieve).

#include <cstddef>
#include <vector>

#include "moonshine/numeric.hpp"

namespace oracles {

using moonshine::Int;

// p(0..n) via ways(m, k) = #partitions of m into parts <= k.
inline std::vector<Int> partition_counts(std::size_t n) {
    std::vector<std::vector<Int>> ways(n + 1,
                                       std::vector<Int>(n + 1, Int(0)));
    for (std::size_t k = 0; k <= n; ++k) ways[0][k] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 1; k <= n; ++k) {
            ways[m][k] = ways[m][k - 1];
            if (m >= k) ways[m][k] += ways[m - k][k];
        }
    std::vector<Int> p(n + 1);
    for (std::size_t m = 0; m <= n; ++m) p[m] = ways[m][n];
    return p;
}

// First n coefficients of prod_{m=1}^{n-1} (1 - q^m).
inline std::vector<Int> euler_product(std::size_t n) {
    std::vector<Int> c(n, Int(0));
    c[0] = 1;
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = n; i-- > m;) c[i] -= c[i - m];
    return c;
}

inline Int sigma(std::size_t m, unsigned e) {
    Int total(0);
    for (std::size_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        Int p(1);
        for (unsigned i = 0; i < e; ++i) p *= static_cast<unsigned long>(d);
        total += p;
    }
    return total;
}

}  // namespace oracles
