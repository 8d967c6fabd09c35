#include "doctest.h"

#include <sstream>

#include "retrieval/bounds.hpp"
#include "retrieval/constructions.hpp"

using namespace retrieval;

TEST_CASE("cut coefficients at n=8, k=4, s*=3") {
    const CutParams cut = cut_params(8, 4, 1, 3, 3);
    CHECK(cut.a1 == Rational(428, 105));  // 8(1/7 + 1/6 + 1/5)
    CHECK(cut.a2 == Rational(8, 5));
    CHECK(cut.b == Rational(533, 105));   // 8 H_8 - 8(1/4+1/3+1/2+1)
    CHECK_THROWS_AS(cut_params(8, 4, 1, 3, 2), InputError);
    CHECK_THROWS_AS(cut_params(8, 4, 1, 3, 4), InputError);
}

TEST_CASE("achievable points satisfy every cut") {
    const RetrievalPair case_b{Rational(4), Rational(74, 15)};
    for (const CutParams& cut : all_cuts(8, 4, 1, 3)) {
        const CutCheck check = check_cut(case_b, cut);
        CHECK(check.satisfied);
        CHECK(check.slack >= 0);
    }
    // a point deep inside the infeasible corner violates the tight cut
    const CutCheck bad =
        check_cut(RetrievalPair{Rational(1), Rational(1)}, cut_params(8, 4, 1, 3, 3));
    CHECK_FALSE(bad.satisfied);
}

TEST_CASE("bound report on the global MDS point") {
    const CodeSpec code = make_global_mds(8, 4, 1);
    const RetrievalPair point{Rational(4), Rational(106, 21)};
    const BoundReport report = evaluate_bounds(point, code);
    CHECK(report.all_satisfied);
    bool saw_nonlinear = false, saw_hyperbolic = false;
    for (const BoundEntry& entry : report.entries) {
        CHECK(entry.satisfied);
        if (entry.name == "nonlinear") saw_nonlinear = true;
        if (entry.name == "hyperbolic_conjectured") saw_hyperbolic = true;
    }
    CHECK(saw_nonlinear);
    CHECK(saw_hyperbolic);
}

TEST_CASE("nonlinear bound on the counterexample") {
    const Mat g = Mat::from_rows(Field(2), {{1, 0, 1, 0, 1}, {0, 1, 0, 1, 1}});
    const CodeSpec code(g, 1);
    CHECK(nonlinear_rhs(code) == Rational(6, 5));
    const RetrievalPair point{Rational(23, 12), Rational(23, 12)};
    CHECK(hyperbolic_sum(point, 1, 1) == Rational(24, 23));
    // max(s1,s2) = 1: the conjectured bound is not emitted
    const BoundReport report = evaluate_bounds(point, code);
    for (const BoundEntry& entry : report.entries)
        CHECK(entry.name != "hyperbolic_conjectured");
    CHECK(report.all_satisfied);
}

TEST_CASE("closed upper bounds for k=4, (1,3)") {
    const ClosedUpperBounds u = closed_upper_bounds(1, 3);
    CHECK(u.smax_rhs == Rational(7, 4));
    CHECK(u.cs_rhs == Rational(16, 11));
    CHECK(u.cs_rhs <= u.smax_rhs);
}

TEST_CASE("region table structure") {
    const RegionTable table = region_table(8, 4, 1, 3, 5);
    std::size_t dedicated = 0, global = 0, cut_rows = 0;
    for (const RegionRow& row : table.rows) {
        if (row.kind == RegionKind::DedicatedPoint) {
            ++dedicated;
            CHECK(row.exact);
        }
        if (row.kind == RegionKind::GlobalMdsPoint) ++global;
        if (row.kind == RegionKind::Cut) ++cut_rows;
    }
    CHECK(dedicated == 5);  // n - k + 1
    CHECK(global == 1);
    CHECK(cut_rows > 0);
    CHECK_THROWS_AS(region_table(8, 4, 1, 3, 1), InputError);

    std::ostringstream out;
    write_region_csv(out, table);
    CHECK(out.str().rfind("# kind,e1,e2", 0) == 0);
    CHECK(out.str().find("dedicated_point") != std::string::npos);
    CHECK(out.str().find("74/15") != std::string::npos);
}
