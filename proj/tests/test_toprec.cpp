#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "hurwitz/toprec.hpp"

using namespace hurwitz;

TEST_CASE("one-point genus zero is the catalan sequence") {
    const CoeffTable t = mg_table(0, 1, 4);
    const long catalan[] = {1, 1, 2, 5, 14};
    for (int e = 0; e <= 4; ++e) {
        const int tuple[] = {e};
        CHECK(t.at(tuple) == Rational(catalan[e]));
    }
}

TEST_CASE("two-point and genus-one entries") {
    const CoeffTable t02 = mg_table(0, 2, 2);
    {
        const int e[] = {1, 0};
        CHECK(t02.at(e) == 4);  // H_0((2,1))/|C_{(2,1)}| = 12/3
    }
    {
        const int e[] = {0, 0};
        CHECK(t02.at(e) == 1);
    }
    const CoeffTable t11 = mg_table(1, 1, 2);
    {
        const int e[] = {1};
        CHECK(t11.at(e) == 1);  // H_1((2))
    }
    const CoeffTable t12 = mg_table(1, 2, 2);
    {
        const int e[] = {0, 0};
        CHECK(t12.at(e) == 1);  // H_1((1,1))
    }
}

TEST_CASE("tables are symmetric despite the asymmetric recursion") {
    CHECK(mg_table(0, 2, 5).symmetric());
    CHECK(mg_table(0, 3, 3).symmetric());
    CHECK(mg_table(1, 2, 4).symmetric());
    CHECK(mg_table(2, 1, 4).symmetric());
}

TEST_CASE("reconciliation against recurrence and closed forms") {
    MemoTable memo;
    CHECK(reconcile(0, 1, 8, memo).ok);
    CHECK(reconcile(0, 2, 4, memo).ok);
    CHECK(reconcile(0, 3, 2, memo).ok);
    CHECK(reconcile(0, 3, 3, memo).ok);
    CHECK(reconcile(1, 1, 4, memo).ok);
    CHECK(reconcile(1, 2, 3, memo).ok);
    CHECK(reconcile(2, 1, 3, memo).ok);
    CHECK(reconcile(2, 2, 4, memo).ok);
    CHECK(reconcile(2, 3, 2, memo).ok);
}

TEST_CASE("values are class-size denominators at worst") {
    MemoTable memo;
    const CoeffTable t = mg_table(1, 2, 3);
    std::vector<int> cur(2, 0);
    for (cur[0] = 0; cur[0] <= 3; ++cur[0]) {
        for (cur[1] = 0; cur[1] <= 3; ++cur[1]) {
            const Rational& v = t.at(cur);
            CHECK(v >= 0);
            const Partition alpha = Composition({cur[0] + 1, cur[1] + 1}).sorted();
            Rational scaled = v * Rational(class_size(alpha));
            CHECK(scaled.get_den() == 1);  // integrality of H recovered
        }
    }
}

namespace {

struct Lcg {
    std::uint64_t state;
    int next(int lo, int hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((state >> 33) % (hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("divided-difference cell rule matches symbolic expansion") {
    // For one-variable data f(u) = sum a_m u^m, the term
    // d/dx2 [ (x1 f(x1) - x2 f(x2)) / (x1 - x2) ] expands symbolically as
    // sum_m a_m sum_{a+b=m, b>=1} b x1^a x2^{b-1}; the engine's cell rule
    // reads (e2+1) a_{e1+e2+1}.
    Lcg rng{777};
    for (int trial = 0; trial < 20; ++trial) {
        const int deg = rng.next(1, 9);
        std::vector<Rational> a(deg + 1);
        for (auto& c : a) c = rng.next(-5, 5);

        const int out_deg = deg;  // (e1, e2) with e1 + e2 + 1 <= deg
        std::vector<std::vector<Rational>> symbolic(out_deg + 1,
                                                    std::vector<Rational>(out_deg + 1, Rational(0)));
        for (int m = 0; m <= deg; ++m)
            for (int b = 1; b <= m; ++b)
                symbolic[m - b][b - 1] += a[m] * b;

        for (int e1 = 0; e1 <= out_deg; ++e1) {
            for (int e2 = 0; e2 <= out_deg; ++e2) {
                const int m = e1 + e2 + 1;
                const Rational rule = m <= deg ? Rational(e2 + 1) * a[m] : Rational(0);
                CHECK(rule == symbolic[e1][e2]);
            }
        }
    }
}

TEST_CASE("csv dump") {
    const CoeffTable t = mg_table(0, 1, 3);
    CHECK(t.csv() == "e1,value\n0,1\n1,1\n2,2\n3,5\n");
}

TEST_CASE("caps are enforced") {
    CHECK_THROWS_AS(mg_table(3, 1, 2), BoundExceeded);
    CHECK_THROWS_AS(mg_table(0, 4, 2), BoundExceeded);
    CHECK_THROWS_AS(mg_table(0, 1, 9), BoundExceeded);
    ToprecCaps loose{3, 4, 12};
    CHECK(mg_table(0, 1, 9, loose).symmetric());
}
