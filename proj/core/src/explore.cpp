#include "retrieval/explore.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "retrieval/errors.hpp"
#include "retrieval/simulate.hpp"
#include "retrieval/threads.hpp"

#include "json.hpp"

namespace retrieval {

bool dominates(const RetrievalPair& p, const RetrievalPair& q) {
    if (p.e1 > q.e1 || p.e2 > q.e2) return false;
    return p.e1 < q.e1 || p.e2 < q.e2;
}

std::vector<FrontierPoint> dedicated_frontier(std::size_t n, std::size_t s1,
                                              std::size_t s2) {
    if (n < s1 + s2) throw BadAllocationError("need n >= s1 + s2");
    std::vector<FrontierPoint> points;
    for (std::size_t n1 = s1; n1 <= n - s2; ++n1) {
        FrontierPoint p;
        p.label = "dedicated n1=" + std::to_string(n1) +
                  " n2=" + std::to_string(n - n1);
        p.pair = RetrievalPair{closed_dedicated_E(n, n1, s1),
                               closed_dedicated_E(n, n - n1, s2)};
        points.push_back(std::move(p));
    }
    return pareto_filter(std::move(points));
}

std::vector<FrontierPoint> pareto_filter(std::vector<FrontierPoint> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < points.size() && !beaten; ++j) {
            if (j == i) continue;
            if (dominates(points[j].pair, points[i].pair)) beaten = true;
            // equal pairs: earlier occurrence wins
            if (j < i && points[j].pair.e1 == points[i].pair.e1 &&
                points[j].pair.e2 == points[i].pair.e2)
                beaten = true;
        }
        points[i].pareto = !beaten;
    }
    return points;
}

LocalGlobalReport compare_local_global(std::size_t n, std::size_t k,
                                       std::size_t s1) {
    if (n < k) throw BadAllocationError("need n >= k");
    LocalGlobalReport report;
    report.n = n;
    report.k = k;
    report.s1 = s1;
    report.s2 = k - s1;
    report.proportional_exact = (n % k == 0);
    report.n1 = n * s1 / k;
    report.n2 = n - report.n1;
    if (!report.proportional_exact)
        report.warning =
            "k does not divide n; floor allocation reported, no verdict";

    const std::size_t s2 = report.s2;
    report.local = RetrievalPair{closed_dedicated_E(n, report.n1, s1),
                                 closed_dedicated_E(n, report.n2, s2)};
    report.global = RetrievalPair{closed_global_mds_E(n, k, s1),
                                  closed_global_mds_E(n, k, s2)};

    // the subset-count inequality is claimed (and holds) for s_i <= s <= k-1;
    // at s >= k the global MDS count is the maximal C(n, s)
    auto alpha_ge = [k](const AlphaProfile& local, const AlphaProfile& global,
                        std::size_t s_i) {
        for (std::size_t s = s_i; s + 1 <= k; ++s)
            if (local.at(s) < global.at(s)) return false;
        return true;
    };
    report.alpha_dominates =
        alpha_ge(alpha_local_mds(n, report.n1, s1), alpha_global_mds(n, k, s1),
                 s1) &&
        alpha_ge(alpha_local_mds(n, report.n2, s2), alpha_global_mds(n, k, s2),
                 s2);
    report.e_dominates = report.local.e1 <= report.global.e1 &&
                         report.local.e2 <= report.global.e2;
    if (report.proportional_exact)
        report.verdict = report.alpha_dominates && report.e_dominates;
    return report;
}

namespace {

Mat sample_rank_k(std::mt19937_64& rng, const Field& field, std::size_t k,
                  std::size_t n) {
    std::uniform_int_distribution<std::uint64_t> entry(0, field.modulus() - 1);
    for (;;) {
        Mat m(field, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = static_cast<Elem>(entry(rng));
        if (rank(m) == k) return m;
    }
}

struct SamplePartial {
    Rational max_sum;
    bool any = false;
    std::vector<ConjectureViolation> violations;
};

void evaluate_matrix(SamplePartial& partial, Mat matrix, std::size_t s1,
                     std::uint64_t sample_index) {
    CodeSpec code(matrix, s1);
    const RetrievalPair pair = expected_pair(code);
    const Rational sum =
        hyperbolic_sum(pair, s1, code.partition().s2);
    if (!partial.any || sum > partial.max_sum) {
        partial.max_sum = sum;
        partial.any = true;
    }
    if (sum > 1)
        partial.violations.push_back(
            ConjectureViolation{sample_index, std::move(matrix), pair, sum});
}

SamplePartial sample_range(std::size_t n, std::size_t k, std::size_t s1,
                           const Field& field, std::uint64_t seed,
                           std::uint64_t first, std::uint64_t last,
                           std::uint64_t index_offset) {
    SamplePartial partial;
    for (std::uint64_t i = first; i < last; ++i) {
        std::mt19937_64 rng(derive_trial_seed(seed, i));
        evaluate_matrix(partial, sample_rank_k(rng, field, k, n), s1,
                        index_offset + i);
    }
    return partial;
}

}  // namespace

ConjectureReport verify_hyperbolic(std::size_t n, std::size_t k,
                                   std::size_t s1, std::uint64_t q,
                                   std::uint64_t samples, std::uint64_t seed,
                                   const std::vector<Mat>& injected,
                                   unsigned threads) {
    if (n > kDefaultEnumerationCap)
        throw TooLargeError("n exceeds the enumeration cap");
    const Field field(q);

    ConjectureReport report;
    report.n = n;
    report.k = k;
    report.s1 = s1;
    report.q = q;
    report.samples = samples + injected.size();
    report.seed = seed;
    report.excluded_regime = std::max(s1, k - s1) == 1;

    SamplePartial total;
    std::uint64_t index = 0;
    for (const Mat& m : injected) evaluate_matrix(total, m, s1, index++);

    const unsigned workers = resolve_threads(threads);
    if (workers <= 1 || samples < 2 * workers) {
        SamplePartial partial =
            sample_range(n, k, s1, field, seed, 0, samples, index);
        if (partial.any && (!total.any || partial.max_sum > total.max_sum)) {
            total.max_sum = partial.max_sum;
            total.any = true;
        }
        for (auto& v : partial.violations)
            total.violations.push_back(std::move(v));
    } else {
        std::vector<SamplePartial> partials(workers);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (samples + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::uint64_t first = w * chunk;
                const std::uint64_t last = std::min(samples, first + chunk);
                if (first < last)
                    partials[w] =
                        sample_range(n, k, s1, field, seed, first, last, index);
            });
        }
        for (auto& t : pool) t.join();
        for (SamplePartial& partial : partials) {
            if (partial.any && (!total.any || partial.max_sum > total.max_sum)) {
                total.max_sum = partial.max_sum;
                total.any = true;
            }
            for (auto& v : partial.violations)
                total.violations.push_back(std::move(v));
        }
    }

    report.max_sum = total.any ? total.max_sum : Rational(0);
    report.violations = std::move(total.violations);
    return report;
}

std::string to_json(const ConjectureReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = report.n;
    j["k"] = report.k;
    j["s1"] = report.s1;
    j["q"] = report.q;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["excluded_regime"] = report.excluded_regime;
    j["max_sum"] = to_fraction_string(report.max_sum);
    j["max_sum_decimal"] = to_decimal_string(report.max_sum);
    j["violations"] = nlohmann::ordered_json::array();
    for (const ConjectureViolation& v : report.violations) {
        std::ostringstream text;
        write_matrix_text(text, v.matrix);
        nlohmann::ordered_json entry;
        entry["sample"] = v.sample;
        entry["e1"] = to_fraction_string(v.pair.e1);
        entry["e2"] = to_fraction_string(v.pair.e2);
        entry["sum"] = to_fraction_string(v.sum);
        entry["matrix"] = text.str();
        j["violations"].push_back(std::move(entry));
    }
    return j.dump(2);
}

std::vector<TraceRow> asymptotic_trace(std::size_t s1, std::size_t s2,
                                       const Rational& e1_target,
                                       const Rational& e2_target,
                                       const std::vector<std::size_t>& n_list) {
    if (e1_target <= Rational(s1) || e2_target <= Rational(s2))
        throw BadTargetError("targets must exceed the file dimensions");
    if (Rational(s1) / e1_target + Rational(s2) / e2_target != 1)
        throw BadTargetError("targets must lie on s1/E1 + s2/E2 = 1");

    std::vector<TraceRow> rows;
    for (std::size_t n : n_list) {
        const Rational exact_n1 = Rational(n) * Rational(s1) / e1_target;
        const BigInt floor_n1 =
            boost::multiprecision::numerator(exact_n1) /
            boost::multiprecision::denominator(exact_n1);
        const std::size_t n1 =
            std::max<std::size_t>(floor_n1.convert_to<std::size_t>(), s1);
        if (n < n1 + s2)
            throw BadAllocationError("n too small for the target allocation");
        TraceRow row;
        row.n = n;
        row.n1 = n1;
        row.n2 = n - n1;
        row.pair = RetrievalPair{closed_dedicated_E(n, row.n1, s1),
                                 closed_dedicated_E(n, row.n2, s2)};
        row.gap1 = boost::multiprecision::abs(row.pair.e1 - e1_target);
        row.gap2 = boost::multiprecision::abs(row.pair.e2 - e2_target);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace retrieval
