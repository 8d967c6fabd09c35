#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "retrieval/code_model.hpp"
#include "retrieval/expectation.hpp"

namespace retrieval {

/// Coefficients of one combinatorial cut at index s_star:
///   E1/a1 + E2/a2 >= b/a1 + b/a2 - 1.
struct CutParams {
    std::size_t s_star = 0;
    Rational a1, a2, b;
};

/// Requires max(s1, s2) <= s_star <= k-1.
CutParams cut_params(std::size_t n, std::size_t k, std::size_t s1,
                     std::size_t s2, std::size_t s_star);

struct CutCheck {
    bool satisfied = false;
    Rational slack;  // LHS - RHS, exact
};

CutCheck check_cut(const RetrievalPair& point, const CutParams& cut);

/// One evaluated bound: slack >= 0 iff satisfied (sign convention is
/// oriented so that feasible points always have nonnegative slack).
struct BoundEntry {
    std::string name;
    Rational rhs;
    Rational slack;
    bool satisfied = false;
};

/// All linear lower bounds at (n, k, s1, s2): per-file dimension floors,
/// the joint floor k + min(s1,s2), the MDS rank-sum floor, the per-file
/// harmonic floors beta_i, and every cut in the family.
std::vector<CutParams> all_cuts(std::size_t n, std::size_t k, std::size_t s1,
                                std::size_t s2);

struct BoundReport {
    RetrievalPair point;
    std::vector<BoundEntry> entries;
    bool all_satisfied = true;
};

/// Evaluate every linear bound against a point.
BoundReport evaluate_linear_bounds(const RetrievalPair& point, std::size_t n,
                                   std::size_t k, std::size_t s1,
                                   std::size_t s2);

/// Evaluate linear bounds plus the code's own nonlinear column-geometry
/// bound and the hyperbolic sum.
BoundReport evaluate_bounds(const RetrievalPair& point, const CodeSpec& code);

/// RHS of the column-geometry bound: 2 - (N(F1) + N(F2)) / n.
Rational nonlinear_rhs(const CodeSpec& code);

/// s1/E1 + s2/E2, exact.
Rational hyperbolic_sum(const RetrievalPair& point, std::size_t s1,
                        std::size_t s2);

struct ClosedUpperBounds {
    Rational smax_rhs;  // 1 + s_max / k
    Rational cs_rhs;    // k^2 / (2 s_min^2 + s_max^2); always <= smax_rhs
};

ClosedUpperBounds closed_upper_bounds(std::size_t s1, std::size_t s2);

enum class RegionKind {
    Cut,
    Smax,
    CauchySchwarz,
    HyperbolaConjectured,
    DedicatedPoint,
    GlobalMdsPoint,
};

struct RegionRow {
    RegionKind kind = RegionKind::Cut;
    std::size_t s_star = 0;  // only for Cut rows
    Rational e1, e2;
    bool exact = false;  // discrete operating points carry exact values
};

struct RegionTable {
    std::size_t n = 0, k = 0, s1 = 0, s2 = 0, grid = 0;
    std::vector<RegionRow> rows;
};

/// Boundary samples of every cut, both closed upper bounds, the conjectured
/// hyperbola, and the discrete dedicated/global operating points.
RegionTable region_table(std::size_t n, std::size_t k, std::size_t s1,
                         std::size_t s2, std::size_t grid_resolution);

/// CSV: "# kind,e1,e2" header; 12 significant digits; dedicated/global rows
/// carry extra exact columns e1_exact,e2_exact as "num/den".
void write_region_csv(std::ostream& out, const RegionTable& table);

std::string region_kind_name(RegionKind kind, std::size_t s_star);

}  // namespace retrieval
