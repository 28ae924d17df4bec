#include "enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "lattice_path.hpp"

namespace simcore {

CoreFamily::CoreFamily(i64 a_, i64 b_, bool sc) : a(a_), b(b_), self_conjugate(sc) {
    if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("simultaneous cores form a finite family only for coprime a, b");
}

void enumerate_cores(const CoreFamily& f, const std::function<void(const Partition&)>& fn) {
    if (f.self_conjugate) {
        enumerate_paths(f.b / 2, f.a / 2, false,
                        [&](const LatticePath& p) { fn(fms_path_to_core(p, f.a, f.b)); });
    } else {
        enumerate_paths(f.b, f.a, true,
                        [&](const LatticePath& p) { fn(anderson_path_to_core(p, f.a, f.b)); });
    }
}

std::vector<Partition> list_cores(const CoreFamily& f) {
    std::vector<Partition> out;
    enumerate_cores(f, [&](const Partition& p) { out.push_back(p); });
    return out;
}

i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i at every step
        i64 t = checked_mul(r, n - k + i);
        r = t / i;
    }
    return r;
}

i64 count_cores_formula(const CoreFamily& f) {
    if (f.self_conjugate) return binomial(f.a / 2 + f.b / 2, f.a / 2);
    i64 c = binomial(f.a + f.b, f.a);
    if (c % (f.a + f.b) != 0)
        throw invariant_error("binom(a+b,a) must be divisible by a+b for coprime a,b");
    return c / (f.a + f.b);
}

i64 count_cores(const CoreFamily& f) {
    i64 n = 0;
    enumerate_cores(f, [&](const Partition&) { ++n; });
    return n;
}

MaxSizeResult max_size(const CoreFamily& f) {
    bool found = false;
    i64 best = -1, ties = 0;
    Partition witness;
    enumerate_cores(f, [&](const Partition& p) {
        i64 s = p.size();
        if (!found || s > best) {
            found = true;
            best = s;
            ties = 1;
            witness = p;
        } else if (s == best) {
            ++ties;
        }
    });
    if (!found) throw invariant_error("empty core family");
    if (ties != 1) throw invariant_error("maximum-size core is not unique");
    if (!is_self_conjugate(witness))
        throw invariant_error("maximum-size core is not self-conjugate");
    return MaxSizeResult{best, std::move(witness)};
}

Rational average_size(const CoreFamily& f) {
    i64 count = 0, total = 0;
    enumerate_cores(f, [&](const Partition& p) {
        ++count;
        total = checked_add(total, p.size());
    });
    return Rational(total, count);
}

namespace {

// Grows partitions from the bottom row up; cols[j-1] counts placed rows of
// length >= j, so the hooks of a freshly added top row are already final.
void grow(i64 a, i64 b, i64 budget, i64 min_part, std::vector<i64>& rows,
          std::vector<i64>& cols, std::vector<Partition>& out) {
    {
        std::vector<i64> parts(rows.rbegin(), rows.rend());
        out.push_back(Partition(std::move(parts)));
    }
    for (i64 p = std::max<i64>(min_part, 1); p <= budget; ++p) {
        bool ok = true;
        for (i64 j = 1; j <= p; ++j) {
            i64 hook = (p - j) + cols[static_cast<std::size_t>(j - 1)] + 1;
            if (hook == a || hook == b) { ok = false; break; }
        }
        if (!ok) continue;
        for (i64 j = 0; j < p; ++j) cols[static_cast<std::size_t>(j)]++;
        rows.push_back(p);
        grow(a, b, budget - p, p, rows, cols, out);
        rows.pop_back();
        for (i64 j = 0; j < p; ++j) cols[static_cast<std::size_t>(j)]--;
    }
}

}  // namespace

std::vector<Partition> brute_force_cores(i64 a, i64 b, i64 size_cap) {
    if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
    if (size_cap < 0) throw std::invalid_argument("size cap must be nonnegative");
    std::vector<i64> rows;
    std::vector<i64> cols(static_cast<std::size_t>(size_cap) + 1, 0);
    std::vector<Partition> out;
    grow(a, b, size_cap, 1, rows, cols, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace simcore
