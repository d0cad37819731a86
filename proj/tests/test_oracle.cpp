#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz/oracle.hpp"

using namespace hurwitz;

TEST_CASE("monotone counts, exhaustively derived") {
    CHECK(count_monotone(Partition{1, 1}, 2, true) == 1);
    CHECK(count_monotone(Partition{3}, 2, true) == 2);
    CHECK(count_monotone(Partition{1, 1, 1}, 4, true) == 8);
    CHECK(count_monotone(Partition{1}, 0, true) == 1);
    CHECK(count_monotone(Partition{2}, 3, true) == 1);  // only (1 2)^3
    CHECK(count_monotone(Partition{1, 1}, 0, false) == 1);  // empty factorization
    CHECK(count_monotone(Partition{1, 1}, 0, true) == 0);
}

TEST_CASE("classical counts, exhaustively derived") {
    CHECK(count_classical(Partition{3}, 2, true) == 3);
    CHECK(count_classical(Partition{2}, 1, true) == 1);
    CHECK(count_classical(Partition{1, 1}, 2, true) == 1);
}

TEST_CASE("rank-weighted counts, exhaustively derived") {
    CHECK(count_rank_factorizations(Partition{1, 1}, 2, 0) == 1);
    CHECK(count_rank_factorizations(Partition{2}, 2, 0) == 2);
    CHECK(count_rank_factorizations(Partition{2}, 3, 0) == 3);
    // Parity mismatch is a zero count, not an error.
    CHECK(count_rank_factorizations(Partition{1, 1, 1}, 1, 0) == 0);
}

TEST_CASE("monotone is a subset of classical") {
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            for (int r = 0; r <= 8; ++r) {
                CHECK(count_monotone(alpha, r, true) <= count_classical(alpha, r, true));
                CHECK(count_monotone(alpha, r, false) <= count_classical(alpha, r, false));
            }
        }
    }
}

TEST_CASE("sign obstruction") {
    for (int d = 1; d <= 5; ++d)
        for (const Partition& alpha : partitions_of(d))
            for (int r = 0; r <= 8; ++r)
                if ((r - (d - alpha.length())) % 2 != 0)
                    CHECK(count_monotone(alpha, r, false) == 0);
}

TEST_CASE("count depends only on the conjugacy class") {
    CHECK(class_independence_check(Partition{2, 1}, 3));
    CHECK(class_independence_check(Partition{3}, 2));
    CHECK(class_independence_check(Partition{1, 1}, 2));
    for (int d = 1; d <= 5; ++d)
        for (const Partition& alpha : partitions_of(d))
            for (int r = 0; r <= 6; ++r) CHECK(class_independence_check(alpha, r));
}

TEST_CASE("enumeration bounds are enforced") {
    std::vector<int> big(8, 1);
    CHECK_THROWS_AS(count_monotone(Partition(big), 2, true), BoundExceeded);
    CHECK_THROWS_AS(count_monotone(Partition{3}, 13, true), BoundExceeded);
    CHECK_THROWS_AS(count_classical(Partition{3}, 9, true), BoundExceeded);
    CHECK_THROWS_AS(count_rank_factorizations(Partition{3, 3}, 2, 0), BoundExceeded);
    OracleBounds loose;
    loose.monotone_max_r = 14;
    CHECK(count_monotone(Partition{2}, 13, true, loose) == 1);
    // Relaxed configuration still cannot exceed the hard ground-set limit.
    loose.monotone_max_d = 20;
    CHECK_THROWS_AS(count_monotone(Partition{13}, 0, true, loose), BoundExceeded);
}
