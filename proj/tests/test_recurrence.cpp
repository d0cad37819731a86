#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/recurrence.hpp"

using namespace hurwitz;

TEST_CASE("initial condition and small values") {
    CHECK(monotone_M(Partition{1}, 0) == 1);
    CHECK(monotone_M(Partition{2}, 0) == 0);
    CHECK(monotone_M(Partition{2, 1}, 3) == 4);
    CHECK(monotone_M(Partition{2}, 3) == 1);
    CHECK(monotone_M(Partition{3}, 2) == 2);
}

TEST_CASE("hurwitz numbers from the recurrence") {
    CHECK(monotone_H(Partition{3}, 2) == 4);
    CHECK(monotone_H(Partition{2, 1}, 3) == 12);
    CHECK(monotone_H(Partition{1, 1}, 2) == 1);
    CHECK(monotone_H_genus(Partition{2}, 1) == 1);
    CHECK(monotone_H_genus(Partition{1, 1}, 1) == 1);
    CHECK(monotone_H_genus(Partition{1}, 1) == 0);
}

TEST_CASE("recurrence agrees with enumeration") {
    MemoTable memo;
    for (int d = 1; d <= 4; ++d)
        for (const Partition& alpha : partitions_of(d))
            for (int r = 0; r <= d + alpha.length() + 2; ++r)
                CHECK(monotone_M(alpha, r, memo) == count_monotone(alpha, r, true));
}

TEST_CASE("parity vanishing and nonnegativity") {
    MemoTable memo;
    for (int d = 1; d <= 5; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            for (int r = 0; r <= 9; ++r) {
                const Integer m = monotone_M(alpha, r, memo);
                CHECK(m >= 0);
                if ((r - (d - alpha.length())) % 2 != 0) CHECK(m == 0);
            }
        }
    }
}

TEST_CASE("peeling the smallest part gives the same numbers") {
    MemoTable largest, smallest;
    for (int d = 1; d <= 5; ++d)
        for (const Partition& alpha : partitions_of(d))
            for (int r = 0; r <= 8; ++r)
                CHECK(monotone_M(alpha, r, largest, PeelRule::largest_part) ==
                      monotone_M(alpha, r, smallest, PeelRule::smallest_part));
}

TEST_CASE("memo statistics and reuse") {
    MemoTable memo;
    monotone_M(Partition{3, 2}, 7, memo);
    const auto misses_first = memo.stats().misses;
    CHECK(misses_first > 0);
    memo.reset_stats();
    monotone_M(Partition{3, 2}, 7, memo);
    CHECK(memo.stats().misses == 0);
    CHECK(memo.stats().hits > 0);
}

TEST_CASE("memo persistence round-trips exactly") {
    const std::string path = "memo_roundtrip_test.jsonl";
    MemoTable memo;
    for (const Partition& alpha : partitions_of(4))
        for (int g = 0; g <= 1; ++g) monotone_H_genus(alpha, g, memo);
    memo.save(path);

    MemoTable loaded;
    loaded.load(path);
    CHECK(loaded.size() == memo.size());
    for (const auto& [key, value] : memo) {
        const Integer* got = loaded.find(key.first, key.second);
        REQUIRE(got != nullptr);
        CHECK(*got == value);
    }

    const std::string path2 = "memo_roundtrip_test2.jsonl";
    loaded.save(path2);
    std::ifstream a(path), b(path2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("loaded memo values are trusted") {
    const std::string path = "memo_poison_test.jsonl";
    {
        std::ofstream out(path);
        out << "{\"format\":\"monotone-memo\",\"version\":1}\n";
        out << "{\"alpha\":[2,1],\"r\":3,\"M\":\"5\"}\n";
    }
    MemoTable memo;
    memo.load(path);
    CHECK(monotone_M(Partition{2, 1}, 3, memo) == 5);  // wrong on purpose
    std::remove(path.c_str());
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(monotone_M(Partition{}, 1), std::invalid_argument);
    CHECK_THROWS_AS(monotone_M(Partition{2}, -1), std::invalid_argument);
    CHECK_THROWS_AS(classical_H_joincut(Partition{}, 1), std::invalid_argument);
    MemoTable memo;
    CHECK_THROWS(memo.load("no_such_memo_file.jsonl"));
}

TEST_CASE("classical join-cut values") {
    CHECK(classical_H_joincut(Partition{2}, 1) == 1);
    CHECK(classical_H_joincut(Partition{3}, 2) == 6);
    CHECK(classical_H_joincut(Partition{1}, 0) == 1);
    CHECK(classical_H_joincut(Partition{1}, 1) == 0);
}

TEST_CASE("classical join-cut agrees with enumeration") {
    ClassicalJoincutTable memo;
    for (int d = 1; d <= 4; ++d)
        for (const Partition& alpha : partitions_of(d))
            for (int r = 0; r <= 6; ++r)
                CHECK(classical_H_joincut(alpha, r, memo) ==
                      class_size(alpha) * count_classical(alpha, r, true));
}

TEST_CASE("classical join-cut agrees with the genus-zero formula") {
    ClassicalJoincutTable memo;
    for (int d = 1; d <= 8; ++d)
        for (const Partition& alpha : partitions_of(d))
            CHECK(classical_H_joincut(alpha, rh_transposition_count(alpha, 0), memo) ==
                  classical_genus0(alpha));
}
