#pragma once

#include <vector>

#include "partition.hpp"

namespace simcore {

enum class Family { TypeA, TypeC };

// Abacus geometry.  Positions are the integer labels m*N + i for level m
// and runner i in 1..R; type C has N = 2n+1 labels per row but only 2n
// runners, so labels divisible by N are not positions at all.
struct AbacusKind {
    Family family = Family::TypeA;
    int rank = 1;  // n

    AbacusKind() = default;
    AbacusKind(Family f, int n) : family(f), rank(n) {
        if (n < 1) throw std::invalid_argument("rank must be >= 1");
    }
    static AbacusKind type_a(int n) { return AbacusKind(Family::TypeA, n); }
    static AbacusKind type_c(int n) { return AbacusKind(Family::TypeC, n); }

    int runners() const { return family == Family::TypeA ? rank : 2 * rank; }     // R
    int labels_per_row() const { return family == Family::TypeA ? rank : 2 * rank + 1; }  // N
    bool is_position(i64 e) const {
        return family == Family::TypeA || mathmod(e, labels_per_row()) != 0;
    }
    friend bool operator==(const AbacusKind&, const AbacusKind&) = default;
};

struct RunnerLevel {
    int runner;  // 1..R
    i64 level;
};

// position = level*N + runner.  Type A maps a remainder of 0 to runner R at
// the previous level; type C rejects multiples of N.
RunnerLevel runner_level(const AbacusKind& kind, i64 position);

// One-line notation of a coset representative: the defining bead positions
// in increasing order.
struct AffineWindow {
    std::vector<i64> w;
    friend bool operator==(const AffineWindow&, const AffineWindow&) = default;
    friend auto operator<=>(const AffineWindow& a, const AffineWindow& b) {
        return a.w <=> b.w;
    }
};

// An abacus stored by its defining beads (the highest bead on each runner);
// the bead set is the union of the downward runner chains, so only
// runner-flush configurations are representable: n-cores in type A and
// self-conjugate 2n-cores in type C.
class Abacus {
public:
    Abacus(AbacusKind kind, std::vector<i64> defining_by_runner);

    const AbacusKind& kind() const { return kind_; }
    // Defining bead of runner r (1-based).
    i64 defining(int runner) const { return defining_[static_cast<std::size_t>(runner - 1)]; }
    bool is_bead(i64 position) const;
    AffineWindow window() const;
    i64 level_sum() const;

    // Same bead set relabeled by a constant shift (type A only; type C
    // labels are pinned by the antisymmetry).
    Abacus shifted(i64 s) const;

private:
    AbacusKind kind_;
    std::vector<i64> defining_;  // index r-1 holds the defining bead of runner r
};

// Walks k valid positions backward (k >= 0) from a position.  For type A
// this is plain subtraction; for type C it skips the non-positions at
// multiples of N.
i64 step_back(const AbacusKind& kind, i64 position, i64 k);

// j-flush: every bead has a bead j positions below it.
bool is_flush(const Abacus& a, i64 j);

// Shifts a type-A abacus so the first gap lands at position 0; the
// nonnegative beads are then the first-column hooks of the partition.
Abacus normalize(const Abacus& a);

// Type A: shifts so defining-bead levels sum to zero.  Type C: validates
// the antisymmetric level condition (those abaci admit no shift).
Abacus balance(const Abacus& a);

Partition abacus_to_partition(const Abacus& a);

// Type A requires an n-core; type C a self-conjugate 2n-core (other shapes
// have no runner-flush abacus on this kind).  Type A returns the normalized
// abacus; type C the antisymmetric (balanced) one, whose positive beads x
// stand for the principal hooks 2x-1.
Abacus partition_to_abacus(const Partition& p, const AbacusKind& kind);

// Rebuilds an abacus from window entries (one defining bead per runner).
Abacus abacus_from_window(const AffineWindow& win, const AbacusKind& kind);

}  // namespace simcore
