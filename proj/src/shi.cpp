#include "shi.hpp"

#include <algorithm>
#include <map>

#include "enumerate.hpp"

namespace simcore {

ShiConfig::ShiConfig(Family f, int n, int m_) : family(f), rank(n), m(m_) {
    if (f == Family::TypeA && n < 2)
        throw std::invalid_argument("type A_{n-1} needs n >= 2");
    if (f == Family::TypeC && n < 1)
        throw std::invalid_argument("type C_n needs n >= 1");
    if (m_ < 1) throw std::invalid_argument("m must be >= 1");
}

std::string PositiveRoot::str() const {
    switch (kind) {
        case EiMinusEj: return "e" + std::to_string(i) + "-e" + std::to_string(j);
        case EiPlusEj: return "e" + std::to_string(i) + "+e" + std::to_string(j);
        default: return "2e" + std::to_string(i);
    }
}

std::vector<PositiveRoot> positive_roots(const ShiConfig& cfg) {
    std::vector<PositiveRoot> roots;
    const int n = cfg.rank;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) roots.push_back({PositiveRoot::EiMinusEj, i, j});
    if (cfg.family == Family::TypeC) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) roots.push_back({PositiveRoot::EiPlusEj, i, j});
        for (int i = 1; i <= n; ++i) roots.push_back({PositiveRoot::TwoEi, i, 0});
    }
    return roots;
}

namespace {

i64 floor_div(i64 num, i64 den) {
    i64 q = num / den, r = num % den;
    return (r != 0 && (r < 0) != (den < 0)) ? q - 1 : q;
}

i64 window_at(const AffineWindow& w, int idx) {  // 1-based
    return w.w[static_cast<std::size_t>(idx - 1)];
}

}  // namespace

i64 floor_coordinate(const AffineWindow& w, const PositiveRoot& r, const ShiConfig& cfg) {
    const i64 N = cfg.labels_per_row();
    const int n = cfg.rank;
    switch (r.kind) {
        case PositiveRoot::EiMinusEj:
            return floor_div(window_at(w, r.j) - window_at(w, r.i), N);
        case PositiveRoot::EiPlusEj:
            return floor_div(window_at(w, 2 * n + 1 - r.j) - window_at(w, r.i), N);
        default:
            return floor_div(window_at(w, 2 * n + 1 - r.i) - window_at(w, r.i), N);
    }
}

DominantAlcove DominantAlcove::from_window(AffineWindow w, const ShiConfig& cfg) {
    const int R = cfg.runners();
    const i64 N = cfg.labels_per_row();
    abacus_from_window(w, cfg.kind());  // residue/position validation
    if (!std::is_sorted(w.w.begin(), w.w.end(), std::less_equal<>()))
        throw std::invalid_argument("dominant alcoves have strictly increasing windows");
    if (cfg.family == Family::TypeA) {
        i64 sum = 0;
        for (i64 e : w.w) sum += e;
        if (sum != static_cast<i64>(R) * (R + 1) / 2)
            throw std::invalid_argument("type-A window is not balanced");
    } else {
        for (int i = 1; i <= R; ++i)
            if (window_at(w, i) + window_at(w, R + 1 - i) != N)
                throw std::invalid_argument("type-C window violates the mirror condition");
    }
    return DominantAlcove{std::move(w)};
}

i64 shi_coordinate(const DominantAlcove& a, const PositiveRoot& r, const ShiConfig& cfg) {
    i64 k = floor_coordinate(a.window, r, cfg);
    if (k < 0) throw invariant_error("negative Shi coordinate on a dominant alcove");
    return k;
}

std::vector<int> right_descents(const AffineWindow& w, const ShiConfig& cfg) {
    const int R = cfg.runners();
    const i64 N = cfg.labels_per_row();
    // Defining bead of each column (runner).
    std::vector<i64> col(static_cast<std::size_t>(R) + 1, 0);
    for (i64 e : w.w) col[static_cast<std::size_t>(runner_level(cfg.kind(), e).runner)] = e;
    auto descent = [&](int lo, int hi) {  // s: column lo -> column hi
        return col[static_cast<std::size_t>(hi)] >= N + col[static_cast<std::size_t>(lo)];
    };
    std::vector<int> out;
    const int top = cfg.family == Family::TypeA ? cfg.rank - 1 : cfg.rank;
    for (int i = 0; i <= top; ++i) {
        int lo = i == 0 ? R : i;
        int hi = i == 0 ? 1 : i + 1;
        if (descent(lo, hi)) out.push_back(i);
    }
    return out;
}

AffineWindow apply_right_reflection(const AffineWindow& w, int i, const ShiConfig& cfg) {
    const int R = cfg.runners();
    const i64 N = cfg.labels_per_row();
    const int n = cfg.rank;
    AffineWindow out = w;
    auto& v = out.w;
    if (cfg.family == Family::TypeA) {
        if (i < 0 || i > n - 1) throw std::invalid_argument("no such simple reflection");
        if (i == 0) {
            i64 first = v.front(), last = v.back();
            v.front() = last - N;
            v.back() = first + N;
        } else {
            std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
        }
        return out;
    }
    if (i < 0 || i > n) throw std::invalid_argument("no such simple reflection");
    if (i == 0) {
        // exchanges positions 1 and -1 of the mirrored permutation
        i64 w1 = v.front();
        v.front() = -w1;
        v[static_cast<std::size_t>(R - 1)] = N + w1;
    } else if (i == n) {
        std::swap(v[static_cast<std::size_t>(n - 1)], v[static_cast<std::size_t>(n)]);
    } else {
        std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
        std::swap(v[static_cast<std::size_t>(R - i - 1)], v[static_cast<std::size_t>(R - i)]);
    }
    return out;
}

i64 alcove_length(const AffineWindow& w, const ShiConfig& cfg) {
    i64 len = 0;
    for (const PositiveRoot& r : positive_roots(cfg)) {
        i64 k = floor_coordinate(w, r, cfg);
        len += k >= 0 ? k : -k;
    }
    return len;
}

bool is_m_minimal(const DominantAlcove& a, const ShiConfig& cfg) {
    Abacus ab = abacus_from_window(a.window, cfg.kind());
    return is_flush(ab, static_cast<i64>(cfg.runners()) * cfg.m + 1);
}

bool is_m_bounded(const DominantAlcove& a, const ShiConfig& cfg) {
    Abacus ab = abacus_from_window(a.window, cfg.kind());
    return is_flush(ab, static_cast<i64>(cfg.runners()) * cfg.m - 1);
}

std::vector<AlcoveRecord> enumerate_dominant(const ShiConfig& cfg, AlcoveSelection which) {
    const i64 R = cfg.runners();
    const i64 flush_step = which == AlcoveSelection::Minimal ? R * cfg.m + 1 : R * cfg.m - 1;
    const bool type_c = cfg.family == Family::TypeC;
    CoreFamily family(R, flush_step, type_c);
    std::vector<AlcoveRecord> out;
    enumerate_cores(family, [&](const Partition& core) {
        Abacus ab = balance(partition_to_abacus(core, cfg.kind()));
        if (!is_flush(ab, flush_step))
            throw invariant_error("enumerated core failed its flush characterization");
        out.push_back(AlcoveRecord{ab.window(), core});
    });
    return out;
}

namespace {

// All dominant windows whose floor coordinates stay <= cap, as level vectors
// per runner (type A: levels sum to zero; type C: level of runner N-r is the
// negative of runner r's).
void capped_windows_a(const ShiConfig& cfg, i64 cap, std::vector<AffineWindow>& out) {
    const int n = cfg.rank;
    const i64 span = cap + 1;  // |level| never exceeds cap+1 once the spread is capped
    std::vector<i64> levels(static_cast<std::size_t>(n));
    auto emit = [&]() {
        AffineWindow w;
        for (int r = 1; r <= n; ++r)
            w.w.push_back(levels[static_cast<std::size_t>(r - 1)] * n + r);
        std::sort(w.w.begin(), w.w.end());
        if (floor_div(w.w.back() - w.w.front(), n) <= cap) out.push_back(std::move(w));
    };
    std::function<void(int, i64)> rec = [&](int r, i64 sum) {
        if (r == n) {
            levels[static_cast<std::size_t>(r - 1)] = -sum;
            if (-sum >= -span && -sum <= span) emit();
            return;
        }
        for (i64 l = -span; l <= span; ++l) {
            levels[static_cast<std::size_t>(r - 1)] = l;
            rec(r + 1, sum + l);
        }
    };
    rec(1, 0);
}

void capped_windows_c(const ShiConfig& cfg, i64 cap, std::vector<AffineWindow>& out) {
    const int n = cfg.rank;
    const i64 N = cfg.labels_per_row();
    const i64 span = cap + 1;
    std::vector<i64> levels(static_cast<std::size_t>(n));
    auto emit = [&]() {
        AffineWindow w;
        for (int r = 1; r <= n; ++r) {
            i64 l = levels[static_cast<std::size_t>(r - 1)];
            w.w.push_back(l * N + r);
            w.w.push_back(-l * N + (N - r));
        }
        std::sort(w.w.begin(), w.w.end());
        if (floor_div(w.w.back() - w.w.front(), N) <= cap) out.push_back(std::move(w));
    };
    std::function<void(int)> rec = [&](int r) {
        if (r > n) {
            emit();
            return;
        }
        for (i64 l = -span; l <= span; ++l) {
            levels[static_cast<std::size_t>(r - 1)] = l;
            rec(r + 1);
        }
    };
    rec(1);
}

}  // namespace

std::vector<AffineWindow> oracle_alcoves(const ShiConfig& cfg, AlcoveSelection which) {
    if ((cfg.family == Family::TypeA && cfg.rank > 4) ||
        (cfg.family == Family::TypeC && cfg.rank > 3) || cfg.m > 2)
        throw limit_error("geometric oracle is restricted to small ranks (A: n<=4, C: n<=3, m<=2)");

    const i64 cap = cfg.m + 1;
    std::vector<AffineWindow> windows;
    if (cfg.family == Family::TypeA) capped_windows_a(cfg, cap, windows);
    else capped_windows_c(cfg, cap, windows);

    const std::vector<PositiveRoot> roots = positive_roots(cfg);
    struct Group {
        std::vector<std::size_t> members;
        bool capped = false;  // some member touches a coordinate of m+1
    };
    std::map<std::vector<i64>, Group> regions;
    std::vector<std::vector<i64>> coords(windows.size());
    for (std::size_t w = 0; w < windows.size(); ++w) {
        std::vector<i64> k, sig;
        for (const PositiveRoot& r : roots) {
            i64 v = floor_coordinate(windows[w], r, cfg);
            if (v < 0) throw invariant_error("dominant window produced a negative coordinate");
            k.push_back(v);
            sig.push_back(std::min<i64>(v, cfg.m));
        }
        coords[w] = std::move(k);
        Group& g = regions[sig];
        g.members.push_back(w);
        for (i64 v : coords[w])
            if (v == cfg.m + 1) g.capped = true;
    }

    std::vector<AffineWindow> out;
    for (const auto& [sig, group] : regions) {
        if (which == AlcoveSelection::Bounded && group.capped) continue;
        std::size_t best = group.members.front();
        int ties = 0;
        i64 best_len = 0;
        for (std::size_t w : group.members) {
            i64 len = 0;
            for (i64 v : coords[w]) len += v;
            bool better = which == AlcoveSelection::Minimal ? len < best_len : len > best_len;
            if (w == group.members.front() || better) {
                best = w;
                best_len = len;
                ties = 1;
            } else if (len == best_len) {
                ++ties;
            }
        }
        if (ties != 1)
            throw invariant_error("Shi region has no unique extremal alcove");
        out.push_back(windows[best]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition alcove_core(const DominantAlcove& a, const ShiConfig& cfg) {
    return abacus_to_partition(abacus_from_window(a.window, cfg.kind()));
}

}  // namespace simcore
