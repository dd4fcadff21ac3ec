#pragma once

// Integer partition counts p(0..n) by the pentagonal-number recurrence
//   p(n) = sum_{k>=1} (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].

#include <cstddef>
#include <vector>

#include "moonshine/numeric.hpp"

namespace moonshine {

struct PartitionTable {
    std::vector<Int> values;  // values[i] = p(i)

    const Int& at(std::size_t n) const { return values.at(n); }
    std::size_t max_index() const { return values.size() - 1; }
};

PartitionTable partition_numbers(std::size_t n);

}  // namespace moonshine
