#pragma once

#include <functional>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace simcore {

// A finite family of simultaneous cores; finiteness needs gcd(a,b) = 1.
struct CoreFamily {
    i64 a, b;
    bool self_conjugate = false;

    CoreFamily(i64 a_, i64 b_, bool sc = false);
};

// Visits each member exactly once, in the lexicographic order (N < E) of
// the corresponding Anderson / FMS path.  The order is stable across
// releases; output files depend on it.
void enumerate_cores(const CoreFamily& f, const std::function<void(const Partition&)>& fn);
std::vector<Partition> list_cores(const CoreFamily& f);

// Closed-form count: (a+b-1)!/(a!b!), resp. binom(fa/2g+fb/2g, fa/2g).
i64 count_cores_formula(const CoreFamily& f);
// Count by actually enumerating.
i64 count_cores(const CoreFamily& f);

// Exact binomial coefficient (checked arithmetic).
i64 binomial(i64 n, i64 k);

struct MaxSizeResult {
    i64 size;
    Partition witness;
};
// Maximum size over the family; asserts the maximizer is unique and
// self-conjugate.
MaxSizeResult max_size(const CoreFamily& f);

// Exact mean of the sizes.
Rational average_size(const CoreFamily& f);

// Independent oracle: all partitions of size <= size_cap that are both
// a-core and b-core, found by growing diagrams row by row (a row's hooks
// are final once the rows below it are fixed) and pruning rows that
// contain hook a or b.  Pure cell arithmetic; no abaci or paths.
std::vector<Partition> brute_force_cores(i64 a, i64 b, i64 size_cap);

}  // namespace simcore
