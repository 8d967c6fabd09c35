#include "doctest.h"

#include "retrieval/explore.hpp"

using namespace retrieval;

TEST_CASE("dominance") {
    const RetrievalPair case_b{Rational(4), Rational(74, 15)};
    const RetrievalPair global{Rational(4), Rational(106, 21)};
    const RetrievalPair case_c{Rational(8, 3), Rational(94, 15)};
    CHECK(dominates(case_b, global));
    CHECK_FALSE(dominates(global, case_b));
    CHECK_FALSE(dominates(case_b, case_c));
    CHECK_FALSE(dominates(case_c, case_b));
    CHECK_FALSE(dominates(case_b, case_b));
}

TEST_CASE("dedicated frontier at n=8, (1,3)") {
    const auto points = dedicated_frontier(8, 1, 3);
    REQUIRE(points.size() == 5);  // n - k + 1
    const Rational e2_values[] = {Rational(428, 105), Rational(74, 15),
                                  Rational(94, 15), Rational(26, 3),
                                  Rational(44, 3)};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(points[i].pair.e2 == e2_values[i]);
        CHECK(points[i].pareto);
        if (i > 0) {
            CHECK(points[i].pair.e1 < points[i - 1].pair.e1);
            CHECK(points[i].pair.e2 > points[i - 1].pair.e2);
        }
    }
    // n = k: single point, the identity allocation
    CHECK(dedicated_frontier(4, 1, 3).size() == 1);
    CHECK(dedicated_frontier(9, 1, 3).size() == 6);
}

TEST_CASE("pareto filter marks dominated and duplicate points") {
    std::vector<FrontierPoint> points;
    for (const FrontierPoint& p : dedicated_frontier(8, 1, 3)) points.push_back(p);
    points.push_back(
        FrontierPoint{"global", {Rational(4), Rational(106, 21)}, false});
    points.push_back(  // duplicate of the first dedicated point
        FrontierPoint{"dup", {Rational(8), Rational(428, 105)}, false});
    const auto marked = pareto_filter(points);
    REQUIRE(marked.size() == 7);
    for (std::size_t i = 0; i < 5; ++i) CHECK(marked[i].pareto);
    CHECK_FALSE(marked[5].pareto);  // global dominated by Case B
    CHECK_FALSE(marked[6].pareto);  // duplicate loses to first occurrence
}

TEST_CASE("local dominates global at the proportional allocation") {
    const LocalGlobalReport r = compare_local_global(8, 4, 1);
    CHECK(r.proportional_exact);
    CHECK(r.n1 == 2);
    CHECK(r.n2 == 6);
    CHECK(r.local.e1 == Rational(4));
    CHECK(r.local.e2 == Rational(74, 15));
    CHECK(r.global.e1 == Rational(4));
    CHECK(r.global.e2 == Rational(106, 21));
    CHECK(r.alpha_dominates);
    CHECK(r.e_dominates);
    REQUIRE(r.verdict.has_value());
    CHECK(*r.verdict);

    const LocalGlobalReport sym = compare_local_global(8, 4, 2);
    CHECK(sym.n1 == 4);
    REQUIRE(sym.verdict.has_value());
    CHECK(*sym.verdict);

    const LocalGlobalReport twelve = compare_local_global(12, 4, 1);
    CHECK(twelve.alpha_dominates);

    const LocalGlobalReport odd = compare_local_global(9, 4, 1);
    CHECK_FALSE(odd.proportional_exact);
    CHECK_FALSE(odd.verdict.has_value());
    CHECK_FALSE(odd.warning.empty());
}

TEST_CASE("hyperbolic verification flags the injected counterexample") {
    const Mat g = Mat::from_rows(Field(2), {{1, 0, 1, 0, 1}, {0, 1, 0, 1, 1}});
    const ConjectureReport report =
        verify_hyperbolic(5, 2, 1, 2, 0, 0, {g});
    CHECK(report.excluded_regime);
    CHECK(report.max_sum == Rational(24, 23));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].sum == Rational(24, 23));
    CHECK(report.violations[0].pair.e1 == Rational(23, 12));
    CHECK(to_json(report).find("24/23") != std::string::npos);
}

TEST_CASE("hyperbolic verification finds nothing at k=4") {
    const ConjectureReport report = verify_hyperbolic(8, 4, 1, 2, 200, 3);
    CHECK_FALSE(report.excluded_regime);
    CHECK(report.violations.empty());
    CHECK(report.max_sum <= 1);
    CHECK(report.max_sum > 0);
    // deterministic across worker counts
    const ConjectureReport again = verify_hyperbolic(8, 4, 1, 2, 200, 3, {}, 3);
    CHECK(report.max_sum == again.max_sum);
}

TEST_CASE("empty report") {
    const ConjectureReport report = verify_hyperbolic(8, 4, 1, 2, 0, 0);
    CHECK(report.samples == 0);
    CHECK(report.max_sum == 0);
    CHECK(report.violations.empty());
    CHECK_THROWS_AS(verify_hyperbolic(40, 4, 1, 2, 1, 0), TooLargeError);
}

TEST_CASE("asymptotic trace") {
    const auto rows =
        asymptotic_trace(1, 3, Rational(4), Rational(4), {400, 4000});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n1 == 100);
    CHECK(rows[0].n2 == 300);
    CHECK(rows[0].pair.e1 == Rational(4));
    CHECK(rows[0].gap1 == 0);
    CHECK(rows[1].gap2 < rows[0].gap2);
    CHECK(rows[1].gap2 < Rational(1, 500));

    CHECK_THROWS_AS(asymptotic_trace(1, 3, Rational(2), Rational(4), {400}),
                    BadTargetError);
    CHECK_THROWS_AS(asymptotic_trace(1, 3, Rational(4), Rational(5), {400}),
                    BadTargetError);
}
