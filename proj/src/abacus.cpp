#include "abacus.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace simcore {

RunnerLevel runner_level(const AbacusKind& kind, i64 position) {
    const i64 N = kind.labels_per_row();
    if (kind.family == Family::TypeA) {
        int r = static_cast<int>(mathmod(position - 1, N)) + 1;
        return RunnerLevel{r, (position - r) / N};
    }
    i64 rem = mathmod(position, N);
    if (rem == 0)
        throw std::invalid_argument("multiples of N are not type-C abacus positions");
    return RunnerLevel{static_cast<int>(rem), (position - rem) / N};
}

Abacus::Abacus(AbacusKind kind, std::vector<i64> defining_by_runner)
    : kind_(kind), defining_(std::move(defining_by_runner)) {
    const int R = kind_.runners();
    if (static_cast<int>(defining_.size()) != R)
        throw std::invalid_argument("expected one defining bead per runner");
    for (int r = 1; r <= R; ++r) {
        RunnerLevel rl = runner_level(kind_, defining(r));
        if (rl.runner != r)
            throw std::invalid_argument("defining bead assigned to the wrong runner");
    }
}

bool Abacus::is_bead(i64 position) const {
    if (!kind_.is_position(position)) return false;
    RunnerLevel rl = runner_level(kind_, position);
    return position <= defining(rl.runner);
}

AffineWindow Abacus::window() const {
    AffineWindow win{defining_};
    std::sort(win.w.begin(), win.w.end());
    return win;
}

i64 Abacus::level_sum() const {
    i64 s = 0;
    for (i64 d : defining_) s += runner_level(kind_, d).level;
    return s;
}

Abacus Abacus::shifted(i64 s) const {
    if (kind_.family != Family::TypeA)
        throw std::invalid_argument("type-C abacus labels admit no shift");
    std::vector<i64> shifted_defs(defining_.size());
    for (i64 d : defining_) {
        RunnerLevel rl = runner_level(kind_, d + s);
        shifted_defs[static_cast<std::size_t>(rl.runner - 1)] = d + s;
    }
    return Abacus(kind_, std::move(shifted_defs));
}

i64 step_back(const AbacusKind& kind, i64 position, i64 k) {
    if (kind.family == Family::TypeA) return position - k;
    const i64 N = kind.labels_per_row();
    i64 e = position;
    for (i64 i = 0; i < k; ++i) {
        --e;
        if (mathmod(e, N) == 0) --e;
    }
    return e;
}

bool is_flush(const Abacus& a, i64 j) {
    if (j < 1) throw std::invalid_argument("flush parameter must be >= 1");
    // Beads are downward-closed per runner, so it is enough that each
    // defining bead sees a bead j positions below.
    for (int r = 1; r <= a.kind().runners(); ++r)
        if (!a.is_bead(step_back(a.kind(), a.defining(r), j))) return false;
    return true;
}

Abacus normalize(const Abacus& a) {
    if (a.kind().family != Family::TypeA)
        throw std::invalid_argument("normalize applies to type-A abaci only");
    // The first gap sits one row above the lowest defining bead.
    i64 first_gap = a.defining(1);
    for (int r = 2; r <= a.kind().runners(); ++r) first_gap = std::min(first_gap, a.defining(r));
    first_gap += a.kind().labels_per_row();
    return a.shifted(-first_gap);
}

Abacus balance(const Abacus& a) {
    if (a.kind().family == Family::TypeA) {
        // A unit shift moves the level sum by exactly one.
        return a.shifted(-a.level_sum());
    }
    const int n = a.kind().rank;
    const i64 N = a.kind().labels_per_row();
    for (int r = 1; r <= 2 * n; ++r)
        if (a.defining(r) + a.defining(2 * n + 1 - r) != N)
            throw std::invalid_argument("type-C abacus violates the antisymmetric level condition");
    return a;
}

Partition abacus_to_partition(const Abacus& a) {
    // Everything at or below the lowest defining bead is a bead, everything
    // above the highest is a gap; read the window in between.
    i64 lo = a.defining(1), hi = a.defining(1);
    for (int r = 2; r <= a.kind().runners(); ++r) {
        lo = std::min(lo, a.defining(r));
        hi = std::max(hi, a.defining(r));
    }
    std::vector<i64> parts;  // bottom row first
    i64 gaps = 0;
    for (i64 e = lo + 1; e <= hi; ++e) {
        if (!a.kind().is_position(e)) continue;
        if (a.is_bead(e)) parts.push_back(gaps);
        else ++gaps;
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

namespace {

Abacus type_a_abacus(const Partition& p, const AbacusKind& kind) {
    const int n = kind.rank;
    if (!is_core(p, n))
        throw std::invalid_argument("partition is not an n-core for this abacus");
    std::vector<i64> beta = first_column_hooks(p);
    // Normalized bead set: all negatives plus the beta numbers.
    std::vector<i64> defining(static_cast<std::size_t>(n));
    // Default: the highest negative position on each runner (position 0 is
    // the first gap, so runner n falls back to -n).
    for (int r = 1; r <= n; ++r)
        defining[static_cast<std::size_t>(r - 1)] = (r == n) ? -n : r - n;
    for (i64 b : beta) {
        int r = runner_level(kind, b).runner;
        defining[static_cast<std::size_t>(r - 1)] =
            std::max(defining[static_cast<std::size_t>(r - 1)], b);
    }
    return Abacus(kind, std::move(defining));
}

Abacus type_c_abacus(const Partition& p, const AbacusKind& kind) {
    const int n = kind.rank;
    const i64 N = kind.labels_per_row();
    if (!is_self_conjugate(p))
        throw std::invalid_argument("type-C abaci represent self-conjugate partitions");
    if (!is_core(p, 2 * n))
        throw std::invalid_argument("partition is not a 2n-core for this abacus");

    // Antisymmetric bead set in string coordinates g (all integers, bead at
    // g iff gap at 1-g): positive beads are x with principal hook 2x-1.
    std::unordered_set<i64> pos;
    for (i64 h : principal_hook_lengths(p)) pos.insert((h + 1) / 2);
    auto bead_at = [&](i64 g) { return g >= 1 ? pos.count(g) > 0 : pos.count(1 - g) == 0; };

    i64 g_hi = 0;
    for (i64 x : pos) g_hi = std::max(g_hi, x);
    i64 g_lo = std::min<i64>(0, 1 - g_hi) - 2 * N;  // below this everything is a bead

    // Walk string coordinates downward in label space; the label of g is
    // recovered by stepping back from the label of g_hi.
    i64 label_hi = g_hi;
    {
        // label(g) for g >= 1 is N + g + floor((g-1)/(2n)); label(0) = N-1.
        label_hi = g_hi >= 1 ? N + g_hi + (g_hi - 1) / (2 * n) : N - 1;
    }
    std::vector<i64> defining(static_cast<std::size_t>(2 * n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    i64 label = label_hi;
    for (i64 g = g_hi; g >= g_lo; --g) {
        if (bead_at(g)) {
            int r = runner_level(kind, label).runner;
            if (!seen[static_cast<std::size_t>(r - 1)]) {
                seen[static_cast<std::size_t>(r - 1)] = true;
                defining[static_cast<std::size_t>(r - 1)] = label;
            }
        }
        label = step_back(kind, label, 1);
    }
    for (bool s : seen)
        if (!s) throw invariant_error("type-C abacus construction missed a runner");
    return Abacus(kind, std::move(defining));
}

}  // namespace

Abacus partition_to_abacus(const Partition& p, const AbacusKind& kind) {
    return kind.family == Family::TypeA ? type_a_abacus(p, kind) : type_c_abacus(p, kind);
}

Abacus abacus_from_window(const AffineWindow& win, const AbacusKind& kind) {
    const int R = kind.runners();
    if (static_cast<int>(win.w.size()) != R)
        throw std::invalid_argument("window length must equal the runner count");
    std::vector<i64> defining(static_cast<std::size_t>(R));
    std::vector<bool> seen(static_cast<std::size_t>(R), false);
    for (i64 e : win.w) {
        if (!kind.is_position(e))
            throw std::invalid_argument("window entry is not an abacus position");
        int r = runner_level(kind, e).runner;
        if (seen[static_cast<std::size_t>(r - 1)])
            throw std::invalid_argument("window entries must cover distinct runners");
        seen[static_cast<std::size_t>(r - 1)] = true;
        defining[static_cast<std::size_t>(r - 1)] = e;
    }
    return Abacus(kind, std::move(defining));
}

}  // namespace simcore
