#include <doctest.h>

#include <numeric>

#include "enumerate.hpp"
#include "lattice_path.hpp"
#include "qpoly.hpp"
#include "stats.hpp"

using namespace simcore;

namespace {

Partition parts(std::vector<i64> v) { return Partition(std::move(v)); }

const Partition kMu =
    parts({19, 19, 16, 12, 9, 9, 9, 7, 7, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2});

}  // namespace

TEST_CASE("type-A descent vector") {
    CHECK(descent_vector_A(parts({7, 6, 2, 2, 2, 2}), 7) ==
          DescentVector{0, 0, 1, 2, 1, 2, 0});
    CHECK(descent_vector_A(parts({}), 5) == DescentVector{0, 0, 0, 0, 0});
    CHECK(descent_vector_A(parts({1}), 2) == DescentVector{0, 1});
}

TEST_CASE("maj_A") {
    CHECK(maj_A(parts({7, 6, 2, 2, 2, 2}), 7) == 21);
    for (i64 n = 1; n <= 6; ++n) CHECK(maj_A(parts({}), n) == n * (n - 1));
    // the five (3,4)-cores and their maj_A values
    CHECK(maj_A(parts({}), 3) == 6);
    CHECK(maj_A(parts({1}), 3) == 4);
    CHECK(maj_A(parts({2}), 3) == 2);
    CHECK(maj_A(parts({1, 1}), 3) == 3);
    CHECK(maj_A(parts({3, 1, 1}), 3) == 0);
}

TEST_CASE("diagonal arms") {
    CHECK(diagonal_arms(kMu) == std::vector<i64>{19, 18, 14, 9, 5, 4, 3});
    CHECK(diagonal_arms(parts({})).empty());
    CHECK(diagonal_arms(parts({2, 1})) == std::vector<i64>{2});
    CHECK_THROWS_AS(diagonal_arms(parts({2})), std::invalid_argument);
}

TEST_CASE("type-C descent vector and maj_C") {
    CHECK(descent_vector_C(kMu, 7) == DescentVector{0, -1, 0, 1, 2, 2, -1, 0});
    CHECK(maj_C(kMu, 7) == 42);
    CHECK(descent_vector_C(parts({}), 3) == DescentVector{0, 0, 0, 0});
    CHECK(maj_C(parts({}), 1) == 2);
    CHECK(maj_C(parts({1}), 1) == 0);
    CHECK(descent_vector_C(parts({1}), 1) == DescentVector{0, 1});
    CHECK(maj_C(parts({}), 2) == 8);
}

TEST_CASE("b-boundary and a-rows") {
    Partition p = parts({7, 6, 2, 2, 2, 2});
    CHECK(b_boundary(p, 8).size() == 17);  // 21 cells minus hooks {12,11,10,9}
    CHECK(b_boundary(parts({}), 3).empty());
    CHECK(b_boundary(parts({1}), 2) == std::vector<Cell>{Cell{1, 1}});
    CHECK(a_rows(p, 7) == std::vector<int>{1, 2, 4, 6});
    CHECK(a_rows(parts({}), 4).empty());
    CHECK(a_rows(parts({1}), 2) == std::vector<int>{1});
}

TEST_CASE("skew length on the worked example") {
    Partition p = parts({7, 6, 2, 2, 2, 2});
    CHECK(skew_length(p, 7, 8) == 13);
    CHECK(p.length() + skew_length(p, 7, 8) == 19);
    CHECK(co_skew_length(p, 7, 8) == 8);
    CHECK(skew_length(parts({}), 3, 4) == 0);
    CHECK(skew_length(parts({1}), 2, 3) == 1);
    CHECK(co_skew_length(parts({1}), 2, 3) == 0);
    CHECK(co_skew_length(parts({}), 2, 3) == 1);
    CHECK_THROWS_AS(skew_length(p, 8, 7), std::invalid_argument);
    CHECK_THROWS_AS(skew_length(p, 2, 4), std::invalid_argument);
}

TEST_CASE("skew length stays within its range (coprime a < b <= 10)") {
    for (i64 a = 2; a <= 9; ++a)
        for (i64 b = a + 1; b <= 10; ++b) {
            if (std::gcd(a, b) != 1) continue;
            enumerate_cores(CoreFamily(a, b), [&](const Partition& p) {
                i64 sl = skew_length(p, a, b);
                REQUIRE(sl >= 0);
                REQUIRE(sl <= (a - 1) * (b - 1) / 2);
            });
        }
}

TEST_CASE("maj_A generating function equals Cat_q(n, n+1)") {
    for (i64 n = 1; n <= 6; ++n) {
        IntPoly gen;
        enumerate_cores(CoreFamily(n, n + 1),
                        [&](const Partition& p) { gen.add_term(1, maj_A(p, n)); });
        REQUIRE(gen == rational_q_catalan(n, n + 1));
    }
}

TEST_CASE("maj_C generating function equals the type-C q-Catalan") {
    for (i64 n = 1; n <= 5; ++n) {
        IntPoly gen;
        enumerate_cores(CoreFamily(2 * n, 2 * n + 1, true), [&](const Partition& p) {
            i64 m = maj_C(p, n);
            REQUIRE(m % 2 == 0);
            gen.add_term(1, m);
        });
        REQUIRE(gen == catalan_C(n));
    }
}

TEST_CASE("maj_A transfers to the major index of the Anderson path") {
    for (i64 n = 1; n <= 7; ++n) {
        enumerate_cores(CoreFamily(n, n + 1), [&](const Partition& p) {
            LatticePath dyck =
                classical_dyck_from_rational(anderson_core_to_path(p, n, n + 1), n);
            REQUIRE(maj_A(p, n) == maj(dyck));
        });
    }
}

TEST_CASE("maj_C is twice the major index of the FMS half path") {
    for (i64 n = 1; n <= 5; ++n) {
        enumerate_cores(CoreFamily(2 * n, 2 * n + 1, true), [&](const Partition& p) {
            LatticePath half = fms_core_to_path(p, 2 * n, 2 * n + 1);
            REQUIRE(maj_C(p, n) == 2 * maj(half));
        });
    }
}
