#include <doctest.h>

#include <numeric>

#include "qpoly.hpp"

using namespace simcore;

TEST_CASE("q-integers and q-binomials") {
    CHECK(q_int(3) == IntPoly({1, 1, 1}));
    CHECK(q_int(0) == IntPoly());
    CHECK(q_binomial(2, 1) == IntPoly({1, 1}));
    CHECK(q_binomial(6, 3) == IntPoly({1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    CHECK(q_binomial(5, 0) == IntPoly({1}));
    CHECK(q_factorial(3) == q_int(2) * q_int(3));
    CHECK_THROWS_AS(q_binomial(3, 4), std::invalid_argument);
}

TEST_CASE("q-binomials: degree, positivity, palindromy (n <= 30)") {
    for (i64 n = 0; n <= 30; ++n)
        for (i64 k = 0; k <= n; ++k) {
            IntPoly p = q_binomial(n, k);
            REQUIRE(p.degree() == k * (n - k));
            const auto& c = p.coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                REQUIRE(c[i] > 0);
                REQUIRE(c[i] == c[c.size() - 1 - i]);
            }
        }
}

TEST_CASE("rational q-Catalan polynomials") {
    CHECK(rational_q_catalan(2, 3) == IntPoly({1, 0, 1}));
    CHECK(rational_q_catalan(3, 4) == IntPoly({1, 0, 1, 1, 1, 0, 1}));
    for (i64 b = 2; b <= 9; ++b) CHECK(rational_q_catalan(1, b) == IntPoly({1}));
    CHECK_THROWS_AS(rational_q_catalan(2, 4), std::invalid_argument);
}

TEST_CASE("rational q-Catalan division is exact for coprime a < b <= 16") {
    for (i64 a = 1; a <= 15; ++a)
        for (i64 b = a + 1; b <= 16; ++b) {
            if (std::gcd(a, b) != 1) continue;
            IntPoly cat = rational_q_catalan(a, b);  // asserts a zero remainder
            REQUIRE(cat * q_int(a + b) == q_binomial(a + b, a));
            REQUIRE(cat.degree() == (a - 1) * (b - 1));
        }
}

TEST_CASE("evaluations") {
    CHECK(rational_q_catalan(2, 3).evaluate(-1) == 2);
    CHECK(rational_q_catalan(3, 4).evaluate(-1) == 3);
    CHECK(rational_q_catalan(5, 8).evaluate(1) == 99);
    CHECK(IntPoly({1, 2, 3}).evaluate(10) == 321);
    CHECK(IntPoly().evaluate(7) == 0);
}

TEST_CASE("specializations at q = 1 and q = -1 (coprime a < b <= 12)") {
    for (i64 a = 1; a <= 11; ++a)
        for (i64 b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            IntPoly cat = rational_q_catalan(a, b);
            i64 count = 1;  // binom(a+b, a) / (a+b)
            for (i64 i = 1; i <= a; ++i) count = count * (b + i) / i;
            REQUIRE(cat.evaluate(1) == count / (a + b));
            i64 sc = 1;  // binom(a/2 + b/2, a/2)
            for (i64 i = 1; i <= a / 2; ++i) sc = sc * (b / 2 + i) / i;
            REQUIRE(cat.evaluate(-1) == sc);
        }
}

TEST_CASE("type-C q-Catalan") {
    CHECK(catalan_C(1) == IntPoly({1, 0, 1}));
    CHECK(catalan_C(2) == IntPoly({1, 0, 1, 0, 2, 0, 1, 0, 1}));
    for (i64 n = 1; n <= 8; ++n) {
        i64 central = 1;
        for (i64 i = 1; i <= n; ++i) central = central * (n + i) / i;
        REQUIRE(catalan_C(n).evaluate(1) == central);
    }
}

TEST_CASE("polynomial arithmetic is exact or throws") {
    CHECK_THROWS_AS(IntPoly({i64(1) << 62}) * IntPoly({4}), std::overflow_error);
    CHECK_THROWS_AS(IntPoly({i64(1) << 62, 1}).evaluate(1000), std::overflow_error);
    CHECK_THROWS_AS(IntPoly::exact_divide(IntPoly({1, 1, 1}), IntPoly({1, 1})),
                    invariant_error);
}

TEST_CASE("bivariate polynomials and the q<->t swap") {
    IntPoly2 p;
    p.add_term(1, 0, 1);
    p.add_term(1, 1, 0);
    CHECK(p == p.swap_qt());
    IntPoly2 q;
    q.add_term(2, 3, 0);
    CHECK_FALSE(q == q.swap_qt());
    q.add_term(-2, 3, 0);
    CHECK(q.is_zero());
}

TEST_CASE("polynomial rendering") {
    CHECK(IntPoly({1, 0, 1}).str() == "1 + q^2");
    CHECK(IntPoly({0, 1, 0, 0, 2}).str() == "q + 2q^4");
    CHECK(IntPoly().str() == "0");
    CHECK(IntPoly({-1, 1}).str() == "-1 + q");
}
