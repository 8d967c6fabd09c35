#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retrieval/bounds.hpp"
#include "retrieval/code_model.hpp"
#include "retrieval/expectation.hpp"

namespace retrieval {

/// One construction on an (E1, E2) sweep.
struct FrontierPoint {
    std::string label;
    RetrievalPair pair;
    bool pareto = false;
};

/// True iff p.e1 <= q.e1 and p.e2 <= q.e2 with at least one strict.
bool dominates(const RetrievalPair& p, const RetrievalPair& q);

/// All n-k+1 dedicated allocations n1 in [s1, n-s2], exact pairs, Pareto
/// flags set (always all true: E1 strictly decreases and E2 strictly
/// increases in n1).
std::vector<FrontierPoint> dedicated_frontier(std::size_t n, std::size_t s1,
                                              std::size_t s2);

/// Mark pareto flags by exact pairwise comparison; input order preserved.
/// Equal pairs never dominate each other, so duplicates are broken by input
/// order: only the first occurrence stays Pareto.
std::vector<FrontierPoint> pareto_filter(std::vector<FrontierPoint> points);

/// Dedicated-vs-global comparison at the proportional allocation.
struct LocalGlobalReport {
    std::size_t n = 0, k = 0, s1 = 0, s2 = 0;
    std::size_t n1 = 0, n2 = 0;    // n1 = floor(n*s1/k), remainder to n2
    bool proportional_exact = false;  // k divides n
    RetrievalPair local;
    RetrievalPair global;
    bool alpha_dominates = false;  // alpha_local(s) >= alpha_global(s) for
                                   // s_i <= s <= k-1, both files
    bool e_dominates = false;      // E_local_i <= E_global_i, both files
    std::optional<bool> verdict;   // only set when proportional_exact
    std::string warning;           // set when k does not divide n
};

LocalGlobalReport compare_local_global(std::size_t n, std::size_t k,
                                       std::size_t s1);

struct ConjectureViolation {
    std::uint64_t sample = 0;
    Mat matrix;
    RetrievalPair pair;
    Rational sum;
};

struct ConjectureReport {
    std::size_t n = 0, k = 0, s1 = 0;
    std::uint64_t q = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    Rational max_sum;  // largest s1/E1 + s2/E2 observed; 0 when samples == 0
    std::vector<ConjectureViolation> violations;  // sums exceeding 1
    bool excluded_regime = false;  // max(s1, s2) == 1, conjecture does not apply
};

/// Sample random rank-k generator matrices over GF(q) (uniform entries,
/// rejection until rank k), compute exact pairs, and record the hyperbolic
/// sums. Deterministic for fixed (parameters, seed) at any worker count.
/// `injected` matrices are evaluated before the random samples and count
/// toward the sample total.
ConjectureReport verify_hyperbolic(std::size_t n, std::size_t k,
                                   std::size_t s1, std::uint64_t q,
                                   std::uint64_t samples, std::uint64_t seed,
                                   const std::vector<Mat>& injected = {},
                                   unsigned threads = 0);

std::string to_json(const ConjectureReport& report);

/// One row of an asymptotic convergence trace.
struct TraceRow {
    std::size_t n = 0, n1 = 0, n2 = 0;
    RetrievalPair pair;
    Rational gap1, gap2;  // |E_i - target_i|
};

/// Dedicated allocations n1 = floor(n*s1/e1_target) traced along n_list.
/// Targets must sit on the hyperbola s1/e1 + s2/e2 = 1 with e_i > s_i;
/// otherwise BadTargetError.
std::vector<TraceRow> asymptotic_trace(std::size_t s1, std::size_t s2,
                                       const Rational& e1_target,
                                       const Rational& e2_target,
                                       const std::vector<std::size_t>& n_list);

}  // namespace retrieval
