#include "qpoly.hpp"

#include <numeric>

namespace simcore {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(i64 coeff, i64 exponent) {
    if (exponent < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (coeff == 0) return IntPoly();
    std::vector<i64> c(static_cast<std::size_t>(exponent) + 1, 0);
    c.back() = coeff;
    return IntPoly(std::move(c));
}

i64 IntPoly::coeff(i64 exponent) const {
    if (exponent < 0 || exponent >= static_cast<i64>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(exponent)];
}

void IntPoly::add_term(i64 coeff, i64 exponent) {
    if (exponent < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (static_cast<i64>(c_.size()) <= exponent) c_.resize(static_cast<std::size_t>(exponent) + 1, 0);
    c_[static_cast<std::size_t>(exponent)] = checked_add(c_[static_cast<std::size_t>(exponent)], coeff);
    trim();
}

i64 IntPoly::evaluate(i64 q0) const {
    i64 v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = checked_add(checked_mul(v, q0), *it);
    return v;
}

IntPoly IntPoly::substitute_q_squared() const {
    if (c_.empty()) return IntPoly();
    std::vector<i64> out(2 * c_.size() - 1, 0);
    for (std::size_t e = 0; e < c_.size(); ++e) out[2 * e] = c_[e];
    return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t e = 0; e < c_.size(); ++e) {
        i64 c = c_[e];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        i64 mag = c < 0 ? -c : c;
        if (mag != 1 || e == 0) s += std::to_string(mag);
        if (e == 1) s += "q";
        else if (e > 1) s += "q^" + std::to_string(e);
    }
    return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<i64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t e = 0; e < c.size(); ++e)
        c[e] = checked_add(e < a.c_.size() ? a.c_[e] : 0, e < b.c_.size() ? b.c_[e] : 0);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<i64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t e = 0; e < c.size(); ++e)
        c[e] = checked_sub(e < a.c_.size() ? a.c_[e] : 0, e < b.c_.size() ? b.c_[e] : 0);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<i64> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::exact_divide(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    std::vector<i64> rem = num.c_;
    const i64 dn = den.degree();
    const i64 lead = den.c_.back();
    std::vector<i64> quot;
    i64 qdeg = num.degree() - dn;
    if (qdeg < 0) qdeg = -1;
    quot.assign(static_cast<std::size_t>(qdeg + 1), 0);
    for (i64 e = num.degree(); e >= dn; --e) {
        i64 top = rem[static_cast<std::size_t>(e)];
        if (top == 0) continue;
        if (top % lead != 0)
            throw invariant_error("polynomial division left a nonzero remainder");
        i64 q = top / lead;
        quot[static_cast<std::size_t>(e - dn)] = q;
        for (i64 i = 0; i <= dn; ++i)
            rem[static_cast<std::size_t>(e - dn + i)] =
                checked_sub(rem[static_cast<std::size_t>(e - dn + i)],
                            checked_mul(q, den.c_[static_cast<std::size_t>(i)]));
    }
    for (i64 r : rem)
        if (r != 0) throw invariant_error("polynomial division left a nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly q_int(i64 n) {
    if (n < 0) throw std::invalid_argument("q-integers need n >= 0");
    return IntPoly(std::vector<i64>(static_cast<std::size_t>(n), 1));
}

IntPoly q_factorial(i64 n) {
    if (n < 0) throw std::invalid_argument("q-factorials need n >= 0");
    IntPoly f = IntPoly::monomial(1, 0);
    for (i64 i = 2; i <= n; ++i) f = f * q_int(i);
    return f;
}

IntPoly q_binomial(i64 n, i64 k) {
    if (k < 0 || k > n) throw std::invalid_argument("q-binomial needs 0 <= k <= n");
    // [m choose j] = [m-1 choose j-1] + q^j [m-1 choose j], row by row.
    std::vector<IntPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = IntPoly::monomial(1, 0);
    for (i64 m = 1; m <= n; ++m) {
        for (i64 j = std::min(m, k); j >= 1; --j) {
            IntPoly shifted = row[static_cast<std::size_t>(j)] * IntPoly::monomial(1, j);
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + shifted;
        }
    }
    return row[static_cast<std::size_t>(k)];
}

IntPoly rational_q_catalan(i64 a, i64 b) {
    if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");
    return IntPoly::exact_divide(q_binomial(a + b, a), q_int(a + b));
}

IntPoly catalan_C(i64 n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return q_binomial(2 * n, n).substitute_q_squared();
}

void IntPoly2::add_term(i64 coeff, i64 eq, i64 et) {
    if (coeff == 0) return;
    Key k{eq, et};
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, coeff);
    } else {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) t_.erase(it);
    }
}

IntPoly2 IntPoly2::swap_qt() const {
    IntPoly2 out;
    for (const auto& [k, c] : t_) out.add_term(c, k.second, k.first);
    return out;
}

}  // namespace simcore
