#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/pde.hpp"
#include "hurwitz/recurrence.hpp"

using namespace hurwitz;

TEST_CASE("monotone genus-zero formula") {
    CHECK(monotone_genus0(Partition{3}) == 4);
    CHECK(monotone_genus0(Partition{2, 1}) == 12);
    CHECK(monotone_genus0(Partition{1, 1}) == 1);
    CHECK(monotone_genus0(Partition{1}) == 1);
    CHECK(monotone_genus0(Partition{1, 1, 1}) == 8);
}

TEST_CASE("single-cycle special case") {
    CHECK(monotone_genus0_single_cycle(3) == 4);
    CHECK(monotone_genus0_single_cycle(2) == 1);
    CHECK(monotone_genus0_single_cycle(4) == 30);
}

TEST_CASE("classical genus-zero formula") {
    CHECK(classical_genus0(Partition{3}) == 6);
    CHECK(classical_genus0(Partition{2}) == 1);
    CHECK(classical_genus0(Partition{1, 1}) == 1);
}

TEST_CASE("arbitrary-factor genus-zero formula, literal evaluation") {
    CHECK(bms_genus0(Partition{1, 1}, 2) == Rational(2));
    CHECK(bms_genus0(Partition{2}, 2) == Rational(6));
    CHECK(bms_genus0(Partition{2}, 3) == Rational(15));
    // As printed the formula has a pole at (single cycle, r = 1).
    CHECK_THROWS_AS(bms_genus0(Partition{3}, 1), std::domain_error);
}

TEST_CASE("formula matches recurrence for every partition up to weight 8") {
    MemoTable memo;
    for (int d = 1; d <= 8; ++d)
        for (const Partition& alpha : partitions_of(d))
            CHECK(monotone_genus0(alpha) == monotone_H_genus(alpha, 0, memo));
}

TEST_CASE("single-cycle values are (d-1)! Catalan numbers") {
    const UniSeries catalan = one_point_genus0(12);
    for (int d = 1; d <= 12; ++d)
        CHECK(Rational(monotone_genus0_single_cycle(d)) == Rational(factorial(d - 1)) * catalan[d - 1]);
}

TEST_CASE("integrality and positivity stress up to weight 10") {
    for (int d = 1; d <= 10; ++d) {
        for (const Partition& alpha : partitions_of(d)) {
            CHECK(monotone_genus0(alpha) > 0);
            CHECK(classical_genus0(alpha) > 0);
        }
    }
}

TEST_CASE("documented discrepancies are reported, not asserted") {
    // The quoted all-ones value agrees at d = 1, 3 and disagrees at d = 2, 4.
    CHECK(monotone_genus0_all_ones_quoted(1) == monotone_genus0(Partition{1}));
    CHECK(monotone_genus0_all_ones_quoted(3) == monotone_genus0(Partition{1, 1, 1}));
    CHECK(monotone_genus0_all_ones_quoted(2) == 2);
    CHECK(monotone_genus0(Partition{1, 1}) == 1);
    CHECK(monotone_genus0_all_ones_quoted(4) == 48);
    CHECK(monotone_genus0(Partition{1, 1, 1, 1}) == 144);

    const FormulaReport rep = all_ones_report(2, monotone_genus0(Partition{1, 1}));
    CHECK(rep.cross_check.find("unreconciled") != std::string::npos);
    const FormulaReport ok = all_ones_report(3, monotone_genus0(Partition{1, 1, 1}));
    CHECK(ok.cross_check.find("agree") != std::string::npos);

    // Enumeration disagrees with the printed arbitrary-factor formula.
    const Integer e1 = class_size(Partition{1, 1}) * count_rank_factorizations(Partition{1, 1}, 2, 0);
    CHECK(e1 == 1);
    const FormulaReport bms = bms_report(Partition{1, 1}, 2, e1);
    CHECK(bms.value == Rational(2));
    CHECK(bms.cross_check.find("unreconciled") != std::string::npos);

    const Integer e2 = class_size(Partition{2}) * count_rank_factorizations(Partition{2}, 2, 0);
    CHECK(e2 == 2);
    const Integer e3 = class_size(Partition{2}) * count_rank_factorizations(Partition{2}, 3, 0);
    CHECK(e3 == 3);
}
