#pragma once

#include <vector>

#include "checked.hpp"

namespace simcore {

// 1-based cell of a Young diagram (row from the top, column from the left).
struct Cell {
    int row = 1;
    int col = 1;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// An integer partition: weakly decreasing positive parts.  The empty
// sequence is the empty partition; zero parts are never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<i64> parts);

    // Rebuilds a partition from a set of distinct nonnegative beta numbers
    // (the first-column hook lengths of the result, possibly padded with a
    // prefix 0,1,2,... of trivial entries).
    static Partition from_beta_set(std::vector<i64> beta);

    const std::vector<i64>& parts() const { return parts_; }
    i64 size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based row access; rows past the last are 0.
    i64 part(int row) const;
    bool contains(Cell c) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<i64> parts_;
};

// Hook lengths and diagram geometry.
i64 hook_length(const Partition& p, Cell c);
Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

// First-column hook lengths, in decreasing order (the beta-set of the
// normalized abacus).
std::vector<i64> first_column_hooks(const Partition& p);

// Hook lengths of the principal (diagonal) cells, in decreasing order.
// These are all odd iff p is self-conjugate, where the hook of the i-th
// diagonal cell is 2*(arm)+1.
std::vector<i64> principal_hook_lengths(const Partition& p);
// Inverse of the above for self-conjugate shapes: hooks must be odd and
// strictly decreasing.
Partition self_conjugate_from_principal_hooks(const std::vector<i64>& hooks);

// a-core predicate via the beta-set criterion: no beta number has its
// a-predecessor missing.  O(length).
bool is_core(const Partition& p, i64 a);

// Removes the rim hook anchored at c (the boundary strip between the end
// of c's arm and the end of its leg).
Partition remove_rim_hook(const Partition& p, Cell c);

// Repeatedly removes rim a-hooks until none remain; order-independent.
Partition a_core_of(const Partition& p, i64 a);

// Finite window of the bi-infinite 0/1 boundary string (0 = vertical step,
// 1 = horizontal), implicitly preceded by 0s and followed by 1s.  Canonical
// form trims leading 0s and trailing 1s; offset is the position label of
// the first stored symbol (0 for words produced by boundary_word, which
// indexes positions so the first gap of the normalized abacus sits at 0).
struct BoundaryWord {
    std::vector<int> steps;
    i64 offset = 0;

    BoundaryWord() = default;
    BoundaryWord(std::vector<int> s, i64 off);

    BoundaryWord canonical() const;
    i64 inversions() const;
    i64 inversions_of_length(i64 a) const;
};

BoundaryWord boundary_word(const Partition& p);
Partition word_to_partition(const BoundaryWord& w);

}  // namespace simcore
