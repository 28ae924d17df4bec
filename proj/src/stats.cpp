#include "stats.hpp"

#include <numeric>
#include <unordered_set>

namespace simcore {

DescentVector descent_vector_A(const Partition& p, i64 n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    DescentVector x(static_cast<std::size_t>(n), 0);
    for (i64 h : first_column_hooks(p)) x[static_cast<std::size_t>(mathmod(h, n))]++;
    return x;
}

DescentVector descent_vector_C(const Partition& p, i64 n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    DescentVector x(static_cast<std::size_t>(n) + 1, 0);
    for (i64 w : diagonal_arms(p)) {
        i64 r = mathmod(w, 2 * n);
        if (r == 0) r = 2 * n;
        if (r <= n) x[static_cast<std::size_t>(r)]++;
        else x[static_cast<std::size_t>(2 * n - r + 1)]--;
    }
    return x;
}

i64 maj_A(const Partition& p, i64 n) {
    DescentVector x = descent_vector_A(p, n);
    i64 m = 0;
    for (i64 i = 1; i <= n - 1; ++i)
        if (x[static_cast<std::size_t>(i - 1)] >= x[static_cast<std::size_t>(i)])
            m += 2 * i - x[static_cast<std::size_t>(i)];
    return m;
}

i64 maj_C(const Partition& p, i64 n) {
    DescentVector x = descent_vector_C(p, n);
    i64 m = 0;
    for (i64 i = 1; i <= n; ++i)
        if (x[static_cast<std::size_t>(i - 1)] >= x[static_cast<std::size_t>(i)])
            m += 2 * i - x[static_cast<std::size_t>(i)] - 1;
    return 2 * m;
}

std::vector<i64> diagonal_arms(const Partition& p) {
    if (!is_self_conjugate(p))
        throw std::invalid_argument("diagonal arms are defined for self-conjugate partitions");
    std::vector<i64> arms;
    for (int i = 1; i <= p.length() && p.part(i) >= i; ++i) arms.push_back(p.part(i) - i + 1);
    return arms;
}

std::vector<Cell> b_boundary(const Partition& p, i64 b) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    Partition conj = conjugate(p);
    std::vector<Cell> cells;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (p.part(i) - j + conj.part(j) - i + 1 < b) cells.push_back(Cell{i, j});
    return cells;
}

std::vector<int> a_rows(const Partition& p, i64 a) {
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    std::vector<i64> beta = first_column_hooks(p);
    std::unordered_set<i64> seen;
    std::vector<int> rows;
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (seen.insert(mathmod(beta[i], a)).second) rows.push_back(static_cast<int>(i) + 1);
    return rows;
}

i64 skew_length(const Partition& p, i64 a, i64 b) {
    if (a >= b) throw std::invalid_argument("skew length requires a < b");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");
    Partition conj = conjugate(p);
    i64 count = 0;
    for (int i : a_rows(p, a))
        for (int j = 1; j <= p.part(i); ++j)
            if (p.part(i) - j + conj.part(j) - i + 1 < b) ++count;
    return count;
}

i64 co_skew_length(const Partition& p, i64 a, i64 b) {
    return (a - 1) * (b - 1) / 2 - skew_length(p, a, b);
}

}  // namespace simcore
