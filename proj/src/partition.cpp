#include "partition.hpp"

#include <algorithm>
#include <unordered_set>

namespace simcore {

Partition::Partition(std::vector<i64> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_beta_set(std::vector<i64> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < beta.size(); ++i)
        if (beta[i] == beta[i + 1])
            throw std::invalid_argument("beta numbers must be distinct");
    if (!beta.empty() && beta.back() < 0)
        throw std::invalid_argument("beta numbers must be nonnegative");
    std::vector<i64> parts;
    const i64 k = static_cast<i64>(beta.size());
    for (i64 i = 0; i < k; ++i) {
        i64 part = beta[static_cast<std::size_t>(i)] - (k - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

i64 Partition::size() const {
    i64 s = 0;
    for (i64 p : parts_) s += p;
    return s;
}

i64 Partition::part(int row) const {
    if (row < 1) throw std::invalid_argument("row index must be >= 1");
    if (row > length()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

bool Partition::contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.row <= length() && c.col <= part(c.row);
}

Partition conjugate(const Partition& p) {
    std::vector<i64> cols;
    if (!p.empty()) {
        cols.assign(static_cast<std::size_t>(p.parts()[0]), 0);
        for (i64 part : p.parts())
            for (i64 j = 0; j < part; ++j) cols[static_cast<std::size_t>(j)]++;
    }
    return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

i64 hook_length(const Partition& p, Cell c) {
    if (!p.contains(c)) throw std::invalid_argument("cell outside the diagram");
    Partition conj = conjugate(p);
    return p.part(c.row) - c.col + conj.part(c.col) - c.row + 1;
}

std::vector<i64> first_column_hooks(const Partition& p) {
    // h(i,1) = lambda_i + length - i; decreasing in i.
    std::vector<i64> beta;
    const i64 k = p.length();
    for (int i = 1; i <= k; ++i) beta.push_back(p.part(i) + k - i);
    return beta;
}

std::vector<i64> principal_hook_lengths(const Partition& p) {
    Partition conj = conjugate(p);
    std::vector<i64> hooks;
    for (int i = 1; i <= p.length() && p.part(i) >= i; ++i)
        hooks.push_back((p.part(i) - i) + (conj.part(i) - i) + 1);
    return hooks;
}

Partition self_conjugate_from_principal_hooks(const std::vector<i64>& hooks) {
    std::vector<i64> parts;
    const int k = static_cast<int>(hooks.size());
    for (int i = 0; i < k; ++i) {
        if (hooks[static_cast<std::size_t>(i)] % 2 == 0)
            throw std::invalid_argument("principal hooks of a self-conjugate shape are odd");
        if (i > 0 && hooks[static_cast<std::size_t>(i - 1)] <= hooks[static_cast<std::size_t>(i)])
            throw std::invalid_argument("principal hooks must be strictly decreasing");
        // arm = leg = (h-1)/2, so row i has (h-1)/2 + i cells.
        parts.push_back((hooks[static_cast<std::size_t>(i)] - 1) / 2 + i + 1);
    }
    // Rows below the Durfee square are forced by the column lengths.
    for (i64 row = k + 1;; ++row) {
        i64 len = 0;
        for (int j = 0; j < k; ++j)
            if (parts[static_cast<std::size_t>(j)] >= row) ++len;
        if (len == 0) break;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

bool is_core(const Partition& p, i64 a) {
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    std::vector<i64> beta = first_column_hooks(p);
    std::unordered_set<i64> have(beta.begin(), beta.end());
    for (i64 b : beta)
        if (b - a >= 0 && !have.count(b - a)) return false;
    return true;
}

Partition remove_rim_hook(const Partition& p, Cell c) {
    // The rim hook at c moves the bead for c's row down onto the gap for
    // c's column: one inversion of the boundary word becomes a non-inversion.
    i64 h = hook_length(p, c);  // validates the cell
    std::vector<i64> beta = first_column_hooks(p);
    i64 bead = beta[static_cast<std::size_t>(c.row - 1)];
    i64 gap = bead - h;
    for (i64 b : beta)
        if (b == gap) throw invariant_error("rim-hook target position is occupied");
    beta[static_cast<std::size_t>(c.row - 1)] = gap;
    return Partition::from_beta_set(std::move(beta));
}

Partition a_core_of(const Partition& p, i64 a) {
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    // Flush the a-runner abacus: every bead drops past the gaps below it
    // on its own runner.
    std::vector<i64> beta = first_column_hooks(p);
    std::unordered_set<i64> have(beta.begin(), beta.end());
    std::vector<i64> flushed;
    for (i64 b : beta) {
        i64 gaps_below = 0;
        for (i64 e = b - a; e >= 0; e -= a)
            if (!have.count(e)) ++gaps_below;
        flushed.push_back(b - a * gaps_below);
    }
    return Partition::from_beta_set(std::move(flushed));
}

BoundaryWord::BoundaryWord(std::vector<int> s, i64 off) : steps(std::move(s)), offset(off) {
    for (int x : steps)
        if (x != 0 && x != 1)
            throw std::invalid_argument("boundary word symbols must be 0 or 1");
}

BoundaryWord BoundaryWord::canonical() const {
    std::size_t lo = 0, hi = steps.size();
    while (lo < hi && steps[lo] == 0) ++lo;
    while (hi > lo && steps[hi - 1] == 1) --hi;
    return BoundaryWord(std::vector<int>(steps.begin() + static_cast<std::ptrdiff_t>(lo),
                                         steps.begin() + static_cast<std::ptrdiff_t>(hi)),
                        offset + static_cast<i64>(lo));
}

i64 BoundaryWord::inversions() const {
    i64 ones = 0, inv = 0;
    for (int s : steps) {
        if (s == 1) ++ones;
        else inv += ones;
    }
    return inv;
}

i64 BoundaryWord::inversions_of_length(i64 a) const {
    i64 count = 0;
    for (std::size_t i = 0; i + static_cast<std::size_t>(a) < steps.size(); ++i)
        if (steps[i] == 1 && steps[i + static_cast<std::size_t>(a)] == 0) ++count;
    return count;
}

BoundaryWord boundary_word(const Partition& p) {
    if (p.empty()) return BoundaryWord({}, 0);
    std::vector<i64> beta = first_column_hooks(p);
    std::unordered_set<i64> have(beta.begin(), beta.end());
    std::vector<int> steps;
    for (i64 e = 0; e <= beta.front(); ++e) steps.push_back(have.count(e) ? 0 : 1);
    return BoundaryWord(std::move(steps), 0).canonical();
}

Partition word_to_partition(const BoundaryWord& w) {
    BoundaryWord c = w.canonical();
    std::vector<i64> parts;  // bottom row first
    i64 ones = 0;
    for (int s : c.steps) {
        if (s == 1) ++ones;
        else parts.push_back(ones);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

}  // namespace simcore
