#include "retrieval/bounds.hpp"

#include <algorithm>
#include <ostream>

namespace retrieval {

CutParams cut_params(std::size_t n, std::size_t k, std::size_t s1,
                     std::size_t s2, std::size_t s_star) {
    const std::size_t s_max = std::max(s1, s2);
    if (s_star < s_max || s_star > k - 1)
        throw InputError("cut index must satisfy max(s1,s2) <= s* <= k-1");
    CutParams cut;
    cut.s_star = s_star;
    cut.a1 = cut.a2 = 0;
    for (std::size_t s = s1; s <= s_star; ++s) cut.a1 += Rational(n, n - s);
    for (std::size_t s = s2; s <= s_star; ++s) cut.a2 += Rational(n, n - s);
    cut.b = Rational(n) * harmonic(n);
    for (std::size_t s = s_star + 1; s <= n - 1; ++s)
        cut.b -= Rational(n, n - s);
    return cut;
}

CutCheck check_cut(const RetrievalPair& point, const CutParams& cut) {
    const Rational lhs = point.e1 / cut.a1 + point.e2 / cut.a2;
    const Rational rhs = cut.b / cut.a1 + cut.b / cut.a2 - 1;
    const Rational slack = lhs - rhs;
    return CutCheck{slack >= 0, slack};
}

std::vector<CutParams> all_cuts(std::size_t n, std::size_t k, std::size_t s1,
                                std::size_t s2) {
    std::vector<CutParams> cuts;
    for (std::size_t s_star = std::max(s1, s2); s_star <= k - 1; ++s_star)
        cuts.push_back(cut_params(n, k, s1, s2, s_star));
    return cuts;
}

namespace {

void push_lower(BoundReport& report, const std::string& name,
                const Rational& lhs, const Rational& rhs) {
    const Rational slack = lhs - rhs;
    report.entries.push_back(BoundEntry{name, rhs, slack, slack >= 0});
    if (slack < 0) report.all_satisfied = false;
}

void push_upper(BoundReport& report, const std::string& name,
                const Rational& lhs, const Rational& rhs) {
    const Rational slack = rhs - lhs;
    report.entries.push_back(BoundEntry{name, rhs, slack, slack >= 0});
    if (slack < 0) report.all_satisfied = false;
}

}  // namespace

BoundReport evaluate_linear_bounds(const RetrievalPair& point, std::size_t n,
                                   std::size_t k, std::size_t s1,
                                   std::size_t s2) {
    BoundReport report;
    report.point = point;
    const Rational sum = point.e1 + point.e2;
    const std::size_t s_min = std::min(s1, s2);

    push_lower(report, "basic_e1", point.e1, Rational(s1));
    push_lower(report, "basic_e2", point.e2, Rational(s2));
    push_lower(report, "joint", sum, Rational(k + s_min));
    push_lower(report, "mds_rank_sum", sum,
               Rational(n) * (2 * harmonic(n) - harmonic(n - k) -
                              harmonic(n - s_min)));
    push_lower(report, "beta_e1", point.e1, beta_floor(n, s1));
    push_lower(report, "beta_e2", point.e2, beta_floor(n, s2));

    for (const CutParams& cut : all_cuts(n, k, s1, s2)) {
        const CutCheck check = check_cut(point, cut);
        report.entries.push_back(BoundEntry{
            "cut_s" + std::to_string(cut.s_star),
            cut.b / cut.a1 + cut.b / cut.a2 - 1, check.slack, check.satisfied});
        if (!check.satisfied) report.all_satisfied = false;
    }
    return report;
}

BoundReport evaluate_bounds(const RetrievalPair& point, const CodeSpec& code) {
    const std::size_t s1 = code.partition().s1, s2 = code.partition().s2;
    BoundReport report =
        evaluate_linear_bounds(point, code.n(), code.k(), s1, s2);
    const Rational sum = hyperbolic_sum(point, s1, s2);
    push_upper(report, "nonlinear", sum, nonlinear_rhs(code));
    if (std::max(s1, s2) >= 2)
        push_upper(report, "hyperbolic_conjectured", sum, Rational(1));
    return report;
}

Rational nonlinear_rhs(const CodeSpec& code) {
    const ColumnClassification c = classify_columns(code);
    return Rational(2) - Rational(c.n_f1 + c.n_f2, code.n());
}

Rational hyperbolic_sum(const RetrievalPair& point, std::size_t s1,
                        std::size_t s2) {
    if (point.e1 <= 0 || point.e2 <= 0)
        throw InputError("hyperbolic sum needs positive expectations");
    return Rational(s1) / point.e1 + Rational(s2) / point.e2;
}

ClosedUpperBounds closed_upper_bounds(std::size_t s1, std::size_t s2) {
    const std::size_t k = s1 + s2;
    const std::size_t s_min = std::min(s1, s2), s_max = std::max(s1, s2);
    return ClosedUpperBounds{
        Rational(k + s_max, k),
        Rational(k * k, 2 * s_min * s_min + s_max * s_max)};
}

RegionTable region_table(std::size_t n, std::size_t k, std::size_t s1,
                         std::size_t s2, std::size_t grid_resolution) {
    if (grid_resolution < 2) throw InputError("grid resolution must be >= 2");
    RegionTable table{n, k, s1, s2, grid_resolution, {}};

    // E1 axis covers every dedicated operating point: the largest E1 is the
    // minimum allocation n1 = s1, giving n * H_{s1}.
    const Rational lo = beta_floor(n, s1);
    const Rational hi = Rational(n) * harmonic(s1);
    const Rational step = (hi - lo) / Rational(grid_resolution - 1);

    auto e1_at = [&](std::size_t j) { return lo + step * Rational(j); };

    for (const CutParams& cut : all_cuts(n, k, s1, s2)) {
        const Rational rhs = cut.b / cut.a1 + cut.b / cut.a2 - 1;
        for (std::size_t j = 0; j < grid_resolution; ++j) {
            const Rational e1 = e1_at(j);
            const Rational e2 = cut.a2 * (rhs - e1 / cut.a1);
            if (e2 <= 0) continue;
            table.rows.push_back(RegionRow{RegionKind::Cut, cut.s_star, e1, e2, false});
        }
    }

    const ClosedUpperBounds upper = closed_upper_bounds(s1, s2);
    struct Curve {
        RegionKind kind;
        Rational rhs;
    };
    for (const Curve& curve :
         {Curve{RegionKind::Smax, upper.smax_rhs},
          Curve{RegionKind::CauchySchwarz, upper.cs_rhs},
          Curve{RegionKind::HyperbolaConjectured, Rational(1)}}) {
        for (std::size_t j = 0; j < grid_resolution; ++j) {
            const Rational e1 = e1_at(j);
            const Rational denom = curve.rhs - Rational(s1) / e1;
            if (denom <= 0) continue;
            const Rational e2 = Rational(s2) / denom;
            table.rows.push_back(RegionRow{curve.kind, 0, e1, e2, false});
        }
    }

    for (std::size_t n1 = s1; n1 <= n - s2; ++n1)
        table.rows.push_back(RegionRow{RegionKind::DedicatedPoint, 0,
                                       closed_dedicated_E(n, n1, s1),
                                       closed_dedicated_E(n, n - n1, s2), true});
    table.rows.push_back(RegionRow{RegionKind::GlobalMdsPoint, 0,
                                   closed_global_mds_E(n, k, s1),
                                   closed_global_mds_E(n, k, s2), true});
    return table;
}

std::string region_kind_name(RegionKind kind, std::size_t s_star) {
    switch (kind) {
        case RegionKind::Cut:
            return "cut_s" + std::to_string(s_star);
        case RegionKind::Smax:
            return "smax";
        case RegionKind::CauchySchwarz:
            return "cauchy_schwarz";
        case RegionKind::HyperbolaConjectured:
            return "hyperbola_conjectured";
        case RegionKind::DedicatedPoint:
            return "dedicated_point";
        case RegionKind::GlobalMdsPoint:
            return "global_mds_point";
    }
    return "?";
}

void write_region_csv(std::ostream& out, const RegionTable& table) {
    out << "# kind,e1,e2\n";
    out << "# hyperbola_conjectured rows trace the conjectured boundary, "
           "not a proved bound\n";
    for (const RegionRow& row : table.rows) {
        out << region_kind_name(row.kind, row.s_star) << ","
            << to_decimal_string(row.e1, 12) << ","
            << to_decimal_string(row.e2, 12);
        if (row.exact)
            out << "," << to_fraction_string(row.e1) << ","
                << to_fraction_string(row.e2);
        out << "\n";
    }
}

}  // namespace retrieval
