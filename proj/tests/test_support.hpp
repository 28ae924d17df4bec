#pragma once

#include <functional>
#include <vector>

#include "partition.hpp"

namespace simcore::testing {

// All partitions of exactly n, parts bounded by max_part.
inline void partitions_of(i64 n, i64 max_part, std::vector<i64>& prefix,
                          const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(std::vector<i64>(prefix)));
        return;
    }
    for (i64 p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_of(n - p, p, prefix, fn);
        prefix.pop_back();
    }
}

// All partitions of every size in [0, max_size].
inline void all_partitions_up_to(i64 max_size, const std::function<void(const Partition&)>& fn) {
    std::vector<i64> prefix;
    for (i64 n = 0; n <= max_size; ++n) partitions_of(n, n, prefix, fn);
}

// Cell-scan core test: the definition, kept independent of the beta-set
// implementation under test.
inline bool is_core_by_cell_scan(const Partition& p, i64 a) {
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (hook_length(p, Cell{i, j}) == a) return false;
    return true;
}

}  // namespace simcore::testing
