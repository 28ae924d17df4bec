#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"

namespace simcore {

// Integer-coefficient polynomial in q with exact (checked) arithmetic.
// Canonical form stores no trailing zero coefficient.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<i64> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly monomial(i64 coeff, i64 exponent);

    const std::vector<i64>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    i64 degree() const { return static_cast<i64>(c_.size()) - 1; }  // -1 for 0
    i64 coeff(i64 exponent) const;
    void add_term(i64 coeff, i64 exponent);

    i64 evaluate(i64 q0) const;   // Horner, exact or overflow error
    IntPoly substitute_q_squared() const;
    std::string str() const;      // e.g. "1 + q^2 + 2q^4"

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    // Exact long division; throws invariant_error unless the remainder is 0.
    static IntPoly exact_divide(const IntPoly& num, const IntPoly& den);

private:
    void trim();
    std::vector<i64> c_;  // c_[e] is the coefficient of q^e
};

IntPoly q_int(i64 n);
IntPoly q_factorial(i64 n);
// Gaussian binomial via the q-Pascal recurrence (no division).
IntPoly q_binomial(i64 n, i64 k);

// Cat_q(a,b) = [a+b choose a]_q / [a+b]_q; the division must come out exact
// and the implementation asserts it does.
IntPoly rational_q_catalan(i64 a, i64 b);

// Cat_q(C_n) = [2n choose n]_{q^2}.
IntPoly catalan_C(i64 n);

// Integer-coefficient polynomial in q and t.
class IntPoly2 {
public:
    using Key = std::pair<i64, i64>;  // (q exponent, t exponent)

    void add_term(i64 coeff, i64 eq, i64 et);
    const std::map<Key, i64>& terms() const { return t_; }
    IntPoly2 swap_qt() const;
    bool is_zero() const { return t_.empty(); }

    friend bool operator==(const IntPoly2&, const IntPoly2&) = default;

private:
    std::map<Key, i64> t_;
};

}  // namespace simcore
