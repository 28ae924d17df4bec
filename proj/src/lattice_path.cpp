#include "lattice_path.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <unordered_set>

namespace simcore {

LatticePath LatticePath::parse(const std::string& s) {
    std::vector<Step> steps;
    steps.reserve(s.size());
    for (char c : s) {
        if (c == 'N') steps.push_back(Step::N);
        else if (c == 'E') steps.push_back(Step::E);
        else throw std::invalid_argument("path steps must be 'N' or 'E'");
    }
    return LatticePath(std::move(steps));
}

i64 LatticePath::east() const {
    return static_cast<i64>(std::count(steps_.begin(), steps_.end(), Step::E));
}

i64 LatticePath::north() const {
    return static_cast<i64>(std::count(steps_.begin(), steps_.end(), Step::N));
}

std::string LatticePath::str() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s.push_back(static_cast<char>(st));
    return s;
}

i64 maj(const LatticePath& p) {
    const auto& s = p.steps();
    i64 m = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == Step::E && s[i + 1] == Step::N) m += static_cast<i64>(i) + 1;
    return m;
}

namespace {

void enumerate_rec(i64 b, i64 a, bool above, i64 x, i64 y, std::vector<Step>& prefix,
                   const std::function<void(const LatticePath&)>& fn) {
    if (x == b && y == a) {
        fn(LatticePath(prefix));
        return;
    }
    if (y < a) {  // N first: lexicographically smaller
        prefix.push_back(Step::N);
        enumerate_rec(b, a, above, x, y + 1, prefix, fn);
        prefix.pop_back();
    }
    if (x < b && (!above || y * b >= a * (x + 1))) {
        prefix.push_back(Step::E);
        enumerate_rec(b, a, above, x + 1, y, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_paths(i64 b, i64 a, bool above_diagonal,
                     const std::function<void(const LatticePath&)>& fn) {
    if (a < 0 || b < 0) throw std::invalid_argument("path endpoint must be nonnegative");
    std::vector<Step> prefix;
    enumerate_rec(b, a, above_diagonal, 0, 0, prefix, fn);
}

std::vector<LatticePath> list_paths(i64 b, i64 a, bool above_diagonal) {
    std::vector<LatticePath> out;
    enumerate_paths(b, a, above_diagonal, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

namespace {

void require_coprime(i64 a, i64 b) {
    if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");
}

// Column heights of the dividing path: h[x] counts the beads among the a
// boxes of column x; bead columns must be filled from the bottom and the
// heights must be monotone, otherwise the bead set is not flush both ways.
std::vector<i64> column_heights(i64 a, i64 b, const std::function<i64(i64, i64)>& label,
                                const std::function<bool(i64)>& bead,
                                const char* what) {
    std::vector<i64> h(static_cast<std::size_t>(b), 0);
    for (i64 x = 0; x < b; ++x) {
        i64 count = 0;
        bool gap_seen = false;
        for (i64 y = 0; y < a; ++y) {
            if (bead(label(x, y))) {
                if (gap_seen) throw std::invalid_argument(what);
                ++count;
            } else {
                gap_seen = true;
            }
        }
        if (x > 0 && count < h[static_cast<std::size_t>(x - 1)])
            throw std::invalid_argument(what);
        h[static_cast<std::size_t>(x)] = count;
    }
    return h;
}

LatticePath path_from_heights(i64 a, i64 b, const std::vector<i64>& h) {
    std::vector<Step> steps;
    i64 y = 0;
    for (i64 x = 0; x < b; ++x) {
        while (y < h[static_cast<std::size_t>(x)]) {
            steps.push_back(Step::N);
            ++y;
        }
        steps.push_back(Step::E);
    }
    while (y < a) {
        steps.push_back(Step::N);
        ++y;
    }
    return LatticePath(std::move(steps));
}

// Heights of the E steps over each column, for a path with exactly b east
// steps and at most a north steps before each.
std::vector<i64> heights_from_path(i64 a, i64 b, const LatticePath& path) {
    if (path.east() != b || path.north() != a)
        throw std::invalid_argument("path endpoint mismatch");
    std::vector<i64> h;
    i64 y = 0;
    for (Step s : path.steps()) {
        if (s == Step::N) ++y;
        else h.push_back(y);
    }
    return h;
}

}  // namespace

LatticePath anderson_core_to_path(const Partition& p, i64 a, i64 b) {
    require_coprime(a, b);
    if (!is_core(p, a) || !is_core(p, b))
        throw std::invalid_argument("partition is not an (a,b)-core");
    std::vector<i64> beta = first_column_hooks(p);
    std::unordered_set<i64> betaset(beta.begin(), beta.end());
    AndersonGrid grid{a, b};
    auto bead = [&](i64 e) { return e < 0 || betaset.count(e) > 0; };
    std::vector<i64> h = column_heights(
        a, b, [&](i64 x, i64 y) { return grid.label(x, y); }, bead,
        "partition is not an (a,b)-core");
    return path_from_heights(a, b, h);
}

Partition anderson_path_to_core(const LatticePath& path, i64 a, i64 b) {
    require_coprime(a, b);
    std::vector<i64> h = heights_from_path(a, b, path);
    AndersonGrid grid{a, b};
    std::vector<i64> beta;
    for (i64 x = 0; x < b; ++x) {
        // Weakly above the diagonal exactly when no negative label ends up
        // on the gap side.
        if (h[static_cast<std::size_t>(x)] * b < a * (x + 1))
            throw std::invalid_argument("path dips below the diagonal");
        for (i64 y = 0; y < h[static_cast<std::size_t>(x)]; ++y) {
            i64 e = grid.label(x, y);
            if (e >= 0) beta.push_back(e);
        }
    }
    return Partition::from_beta_set(std::move(beta));
}

namespace {

// Bead predicate of the antisymmetric abacus of a self-conjugate partition,
// in string coordinates: bead at e iff gap at 1-e.
std::function<bool(i64)> antisymmetric_beads(const Partition& p) {
    auto pos = std::make_shared<std::unordered_set<i64>>();
    for (i64 hook : principal_hook_lengths(p)) pos->insert((hook + 1) / 2);
    return [pos](i64 e) { return e >= 1 ? pos->count(e) > 0 : pos->count(1 - e) == 0; };
}

}  // namespace

LatticePath fms_core_to_path(const Partition& p, i64 a, i64 b) {
    require_coprime(a, b);
    if (!is_self_conjugate(p))
        throw std::invalid_argument("the FMS bijection takes self-conjugate partitions");
    if (!is_core(p, a) || !is_core(p, b))
        throw std::invalid_argument("partition is not an (a,b)-core");
    FmsGrid grid{a, b};
    std::vector<i64> h = column_heights(
        a, b, [&](i64 x, i64 y) { return grid.label(x, y); }, antisymmetric_beads(p),
        "partition is not an (a,b)-core");
    LatticePath full = path_from_heights(a, b, h);
    const i64 half_len = a / 2 + b / 2;
    std::vector<Step> half(full.steps().begin(), full.steps().begin() + half_len);
    LatticePath result{std::move(half)};
    if (result.east() != b / 2 || result.north() != a / 2)
        throw invariant_error("FMS half path misses the center");
    return result;
}

Partition fms_path_to_core(const LatticePath& half, i64 a, i64 b) {
    require_coprime(a, b);
    if (half.east() != b / 2 || half.north() != a / 2)
        throw std::invalid_argument("FMS path endpoint mismatch");
    FmsGrid grid{a, b};

    // Complete the column heights through the grid's half-turn.  The top row
    // is gap-only when a is odd (its mirror sits below the grid).
    std::vector<i64> h(static_cast<std::size_t>(b), -1);
    {
        std::vector<i64> half_h = heights_from_path(a / 2, b / 2, half);
        for (i64 x = 0; x < b / 2; ++x) h[static_cast<std::size_t>(x)] = half_h[static_cast<std::size_t>(x)];
    }
    const i64 mirror_total = a % 2 == 0 ? a : a - 1;
    if (b % 2 == 1) h[static_cast<std::size_t>(b / 2)] = mirror_total / 2;
    for (i64 x = 0; x < b / 2; ++x)
        h[static_cast<std::size_t>(b - 1 - x)] = mirror_total - h[static_cast<std::size_t>(x)];

    // Bead status of any label: columns right of the grid are all beads,
    // left of it all gaps.
    i64 binv = 0;  // b^{-1} mod a
    if (a == 1) {
        binv = 0;
    } else {
        for (i64 t = 0; t < a; ++t)
            if (mathmod(b * t, a) == 1) { binv = t; break; }
    }
    auto bead = [&](i64 e) {
        i64 y = a == 1 ? 0 : mathmod((e - grid.offset()) * binv, a);
        i64 x = (grid.offset() + b * y - e) / a;
        if (x >= b) return true;
        if (x < 0) return false;
        return y < h[static_cast<std::size_t>(x)];
    };

    // Collect positive beads; they determine the self-conjugate partition.
    std::vector<i64> hooks;
    const i64 e_max = grid.offset() + b * (a - 1);
    for (i64 e = 1; e <= e_max; ++e)
        if (bead(e)) hooks.push_back(2 * e - 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return self_conjugate_from_principal_hooks(hooks);
}

LatticePath classical_dyck_from_rational(const LatticePath& path, i64 n) {
    if (path.east() != n + 1 || path.north() != n)
        throw std::invalid_argument("expected a path to (n+1, n)");
    if (path.steps().empty() || path.steps().back() != Step::E)
        throw std::invalid_argument("the final step of an above-diagonal path to (n+1,n) is E");
    std::vector<Step> steps(path.steps().begin(), path.steps().end() - 1);
    return LatticePath(std::move(steps));
}

}  // namespace simcore
