#include <doctest.h>

#include <map>
#include <set>

#include "partition.hpp"
#include "test_support.hpp"

using namespace simcore;
using simcore::testing::all_partitions_up_to;
using simcore::testing::is_core_by_cell_scan;

namespace {

Partition parts(std::vector<i64> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("partition construction and validation") {
    CHECK(parts({}).empty());
    CHECK(parts({5, 4, 2, 1, 1}).size() == 13);
    CHECK(parts({5, 4, 2, 1, 1}).length() == 5);
    CHECK(parts({3, 0, 0}) == parts({3}));  // trailing zeros trimmed
    CHECK_THROWS_AS(parts({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(parts({2, -1}), std::invalid_argument);
}

TEST_CASE("hook lengths") {
    CHECK(hook_length(parts({1}), Cell{1, 1}) == 1);
    // first-column hooks read straight off the diagram
    Partition p = parts({5, 4, 2, 1, 1});
    CHECK(first_column_hooks(p) == std::vector<i64>{9, 7, 4, 2, 1});
    Partition q = parts({7, 6, 2, 2, 2, 2});
    CHECK(first_column_hooks(q) == std::vector<i64>{12, 10, 5, 4, 3, 2});
    CHECK_THROWS_AS(hook_length(p, Cell{1, 6}), std::invalid_argument);
    CHECK_THROWS_AS(hook_length(p, Cell{6, 1}), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(parts({5, 4, 2, 1, 1})) == parts({5, 3, 2, 2, 1}));
    CHECK(conjugate(parts({})) == parts({}));
    CHECK(conjugate(parts({3, 3, 1, 1, 1})) == parts({5, 2, 2}));
}

TEST_CASE("conjugation is an involution (exhaustive to size 30)") {
    all_partitions_up_to(30, [](const Partition& p) {
        REQUIRE(conjugate(conjugate(p)) == p);
    });
}

TEST_CASE("is_core agrees with the cell-scan oracle") {
    CHECK(is_core(parts({3, 3, 1, 1, 1}), 4));
    CHECK(is_core(parts({}), 1));
    CHECK(is_core(parts({}), 7));
    CHECK(is_core(parts({7, 6, 2, 2, 2, 2}), 7));
    CHECK(is_core(parts({7, 6, 2, 2, 2, 2}), 8));
    all_partitions_up_to(18, [](const Partition& p) {
        for (i64 a = 1; a <= 8; ++a) REQUIRE(is_core(p, a) == is_core_by_cell_scan(p, a));
    });
}

TEST_CASE("core predicate respects conjugation") {
    all_partitions_up_to(16, [](const Partition& p) {
        Partition c = conjugate(p);
        for (i64 a = 2; a <= 6; ++a) REQUIRE(is_core(p, a) == is_core(c, a));
    });
}

TEST_CASE("rim hook removal") {
    // hook of length 6 at (1,2) in (5,4,2,1,1)
    Partition p = parts({5, 4, 2, 1, 1});
    CHECK(hook_length(p, Cell{1, 2}) == 6);
    CHECK(remove_rim_hook(p, Cell{1, 2}) == parts({3, 1, 1, 1, 1}));
    CHECK(remove_rim_hook(parts({1}), Cell{1, 1}) == parts({}));
    CHECK(remove_rim_hook(parts({2, 2}), Cell{1, 1}) == parts({1}));
    CHECK_THROWS_AS(remove_rim_hook(p, Cell{1, 9}), std::invalid_argument);
}

TEST_CASE("rim hook removal drops the size by the hook length") {
    all_partitions_up_to(14, [](const Partition& p) {
        for (int i = 1; i <= p.length(); ++i)
            for (int j = 1; j <= p.part(i); ++j) {
                Cell c{i, j};
                Partition r = remove_rim_hook(p, c);
                REQUIRE(r.size() == p.size() - hook_length(p, c));
            }
    });
}

TEST_CASE("a-core reduction") {
    CHECK(a_core_of(parts({5, 4, 2, 1, 1}), 6) == parts({3, 1, 1, 1, 1}));
    CHECK(a_core_of(parts({2, 2}), 2) == parts({}));
    all_partitions_up_to(12, [](const Partition& p) {
        for (i64 a = 1; a <= 5; ++a)
            if (is_core(p, a)) REQUIRE(a_core_of(p, a) == p);
    });
}

namespace {

// Explores every order of rim a-hook removals; all leaves must agree.
Partition core_by_all_orders(const Partition& p, i64 a,
                             std::map<std::pair<std::vector<i64>, i64>, Partition>& memo) {
    auto key = std::make_pair(p.parts(), a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Partition result;
    bool found = false;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (hook_length(p, Cell{i, j}) == a) {
                Partition sub = core_by_all_orders(remove_rim_hook(p, Cell{i, j}), a, memo);
                if (!found) {
                    result = sub;
                    found = true;
                } else {
                    REQUIRE(sub == result);
                }
            }
    if (!found) result = p;
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

TEST_CASE("a-core is independent of the removal order (backtracking to size 20)") {
    std::map<std::pair<std::vector<i64>, i64>, Partition> memo;
    all_partitions_up_to(20, [&](const Partition& p) {
        for (i64 a = 2; a <= 6; ++a) {
            Partition via_orders = core_by_all_orders(p, a, memo);
            REQUIRE(via_orders == a_core_of(p, a));
            REQUIRE((p.size() - via_orders.size()) % a == 0);
        }
    });
}

TEST_CASE("boundary words") {
    Partition p = parts({5, 4, 2, 1, 1});
    BoundaryWord w = boundary_word(p);
    CHECK(w.offset == 0);
    CHECK(w.steps == std::vector<int>{1, 0, 0, 1, 0, 1, 1, 0, 1, 0});
    // the same word with extra context canonicalizes to it
    BoundaryWord padded({0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1}, -1);
    CHECK(padded.canonical().steps == w.steps);
    CHECK(padded.canonical().offset == 0);
    CHECK(boundary_word(parts({})).steps.empty());
    CHECK(boundary_word(parts({1})).steps == std::vector<int>{1, 0});
    CHECK_THROWS_AS(BoundaryWord({0, 2}, 0), std::invalid_argument);
}

TEST_CASE("boundary word roundtrip and inversions (exhaustive to size 16)") {
    all_partitions_up_to(16, [](const Partition& p) {
        BoundaryWord w = boundary_word(p);
        REQUIRE(word_to_partition(w) == p);
        REQUIRE(w.inversions() == p.size());
        // inversions of length a <-> cells of hook length a
        for (i64 a = 1; a <= 6; ++a) {
            i64 cells = 0;
            for (int i = 1; i <= p.length(); ++i)
                for (int j = 1; j <= p.part(i); ++j)
                    if (hook_length(p, Cell{i, j}) == a) ++cells;
            REQUIRE(w.inversions_of_length(a) == cells);
        }
    });
}

TEST_CASE("principal hooks determine self-conjugate shapes") {
    CHECK(principal_hook_lengths(parts({2, 1})) == std::vector<i64>{3});
    Partition mu = parts({19, 19, 16, 12, 9, 9, 9, 7, 7, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2});
    REQUIRE(is_self_conjugate(mu));
    CHECK(principal_hook_lengths(mu) == std::vector<i64>{37, 35, 27, 17, 9, 7, 5});
    all_partitions_up_to(20, [](const Partition& p) {
        if (!is_self_conjugate(p)) return;
        REQUIRE(self_conjugate_from_principal_hooks(principal_hook_lengths(p)) == p);
    });
}
