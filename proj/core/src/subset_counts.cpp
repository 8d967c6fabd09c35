#include "retrieval/subset_counts.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "retrieval/threads.hpp"

namespace retrieval {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RETRIEVAL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

// C(n, s) for n <= 28 fits comfortably in 64 bits.
struct PascalTable {
    std::size_t n;
    std::vector<std::uint64_t> c;  // (n+1) x (n+1)
    explicit PascalTable(std::size_t n_) : n(n_), c((n_ + 1) * (n_ + 1), 0) {
        for (std::size_t i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (std::size_t j = 1; j <= i; ++j)
                at(i, j) = at(i - 1, j - 1) + (j <= i - 1 ? at(i - 1, j) : 0);
        }
    }
    std::uint64_t& at(std::size_t i, std::size_t j) { return c[i * (n + 1) + j]; }
    std::uint64_t get(std::size_t i, std::size_t j) const {
        return j > i ? 0 : c[i * (n + 1) + j];
    }
};

// Include/exclude enumeration over column indices. Two bases ride along:
// `span` holds the chosen columns, `joint` additionally holds the file basis.
// The file is contained in the chosen span iff both ranks agree (gap == 0);
// the gap never increases and drops by at most 1 per column, which gives the
// two prunes below.
template <typename Basis, typename Col>
struct Enumerator {
    const std::vector<Col>& cols;
    const PascalTable& pascal;
    std::vector<std::uint64_t>& counts;

    void run(std::size_t idx, std::size_t size, const Basis& span,
             const Basis& joint, std::size_t gap) {
        const std::size_t rem = cols.size() - idx;
        if (gap == 0) {
            for (std::size_t t = 0; t <= rem; ++t)
                counts[size + t] += pascal.get(rem, t);
            return;
        }
        if (gap > rem) return;
        Basis span2 = span;
        Basis joint2 = joint;
        const bool grew_span = span2.insert(cols[idx]);
        const bool grew_joint = joint2.insert(cols[idx]);
        const std::size_t gap2 = gap - (grew_span && !grew_joint ? 1 : 0);
        run(idx + 1, size + 1, span2, joint2, gap2);
        run(idx + 1, size, span, joint, gap);
    }
};

// Subtree handle for the parallel split on the first include/exclude levels.
template <typename Basis>
struct Subtree {
    Basis span, joint;
    std::size_t idx, size, gap;
};

template <typename Basis, typename Col>
void collect(const std::vector<Col>& cols, const PascalTable& pascal,
             std::vector<std::uint64_t>& prefix_counts, std::size_t depth,
             std::size_t idx, std::size_t size, const Basis& span,
             const Basis& joint, std::size_t gap,
             std::vector<Subtree<Basis>>& out) {
    const std::size_t rem = cols.size() - idx;
    if (gap == 0) {
        for (std::size_t t = 0; t <= rem; ++t)
            prefix_counts[size + t] += pascal.get(rem, t);
        return;
    }
    if (gap > rem) return;
    if (idx == depth) {
        out.push_back(Subtree<Basis>{span, joint, idx, size, gap});
        return;
    }
    Basis span2 = span;
    Basis joint2 = joint;
    const bool grew_span = span2.insert(cols[idx]);
    const bool grew_joint = joint2.insert(cols[idx]);
    const std::size_t gap2 = gap - (grew_span && !grew_joint ? 1 : 0);
    collect(cols, pascal, prefix_counts, depth, idx + 1, size + 1, span2,
            joint2, gap2, out);
    collect(cols, pascal, prefix_counts, depth, idx + 1, size, span, joint,
            gap, out);
}

template <typename Basis, typename Col>
std::vector<std::uint64_t> enumerate_counts(const std::vector<Col>& cols,
                                            const Basis& empty_span,
                                            const Basis& file_joint,
                                            std::size_t target_dim,
                                            unsigned threads) {
    const std::size_t n = cols.size();
    const PascalTable pascal(n);
    std::vector<std::uint64_t> counts(n + 1, 0);

    threads = std::min<unsigned>(threads, 64);
    std::size_t depth = 0;
    while ((1u << depth) < threads && depth + 1 < n) ++depth;

    std::vector<Subtree<Basis>> tasks;
    collect(cols, pascal, counts, depth, 0, 0, empty_span, file_joint,
            target_dim, tasks);

    if (threads <= 1 || tasks.size() <= 1) {
        Enumerator<Basis, Col> e{cols, pascal, counts};
        for (const auto& t : tasks) e.run(t.idx, t.size, t.span, t.joint, t.gap);
        return counts;
    }

    std::vector<std::vector<std::uint64_t>> partial(
        tasks.size(), std::vector<std::uint64_t>(n + 1, 0));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            Enumerator<Basis, Col> e{cols, pascal, partial[i]};
            e.run(tasks[i].idx, tasks[i].size, tasks[i].span, tasks[i].joint,
                  tasks[i].gap);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& part : partial)
        for (std::size_t s = 0; s <= n; ++s) counts[s] += part[s];
    return counts;
}

}  // namespace

AlphaProfile alpha_exhaustive(const CodeSpec& code, int file, std::size_t cap,
                              bool force, unsigned threads) {
    const std::size_t n = code.n();
    if (n > cap && !force)
        throw TooLargeError("n = " + std::to_string(n) +
                            " exceeds enumeration cap " + std::to_string(cap));
    const std::size_t s_i = code.file_dim(file);
    const unsigned workers = resolve_threads(threads);

    std::vector<std::uint64_t> counts;
    if (code.field().modulus() == 2 && code.k() <= kPackedMaxRows) {
        std::vector<std::uint64_t> cols(n);
        for (std::size_t j = 0; j < n; ++j)
            cols[j] = pack_gf2(code.matrix().column(j));
        Gf2Basis span{};
        Gf2Basis joint{};
        for (const Vec& b : code.file_basis(file)) joint.insert(pack_gf2(b));
        counts = enumerate_counts(cols, span, joint, s_i, workers);
    } else {
        const std::vector<Vec> cols = code.matrix().columns();
        IncrementalBasis span(code.field(), code.k());
        IncrementalBasis joint(code.field(), code.k());
        for (const Vec& b : code.file_basis(file)) joint.insert(b);
        counts = enumerate_counts(cols, span, joint, s_i, workers);
    }

    AlphaProfile profile{n, s_i, std::vector<BigInt>(n + 1)};
    for (std::size_t s = 0; s <= n; ++s) profile.counts[s] = counts[s];
    return profile;
}

AlphaProfile alpha_identity(std::size_t k, std::size_t s_i) {
    AlphaProfile p{k, s_i, std::vector<BigInt>(k + 1)};
    for (std::size_t s = s_i; s <= k; ++s)
        p.counts[s] = binomial(static_cast<std::int64_t>(k - s_i),
                               static_cast<std::int64_t>(s - s_i));
    return p;
}

AlphaProfile alpha_global_mds(std::size_t n, std::size_t k, std::size_t s_i) {
    AlphaProfile p{n, s_i, std::vector<BigInt>(n + 1)};
    for (std::size_t s = s_i; s <= n; ++s) {
        if (s <= k - 1)
            p.counts[s] = binomial(static_cast<std::int64_t>(n - s_i),
                                   static_cast<std::int64_t>(s - s_i));
        else
            p.counts[s] = binomial(static_cast<std::int64_t>(n),
                                   static_cast<std::int64_t>(s));
    }
    return p;
}

AlphaProfile alpha_local_mds(std::size_t n, std::size_t n_i, std::size_t s_i) {
    AlphaProfile p{n, s_i, std::vector<BigInt>(n + 1)};
    for (std::size_t s = s_i; s <= n; ++s) {
        BigInt total = 0;
        for (std::size_t j = s_i; j <= std::min(s, n_i); ++j)
            total += binomial(static_cast<std::int64_t>(n_i),
                              static_cast<std::int64_t>(j)) *
                     binomial(static_cast<std::int64_t>(n - n_i),
                              static_cast<std::int64_t>(s - j));
        p.counts[s] = total;
    }
    return p;
}

std::vector<Rational> p_profile(const AlphaProfile& alpha) {
    std::vector<Rational> p(alpha.n + 1);
    for (std::size_t s = 0; s <= alpha.n; ++s)
        p[s] = Rational(alpha.counts[s],
                        binomial(static_cast<std::int64_t>(alpha.n),
                                 static_cast<std::int64_t>(s)));
    return p;
}

bool check_mutual_exclusivity(const AlphaProfile& a1, const AlphaProfile& a2,
                              std::size_t k) {
    for (std::size_t s = 0; s < k && s <= a1.n; ++s)
        if (a1.counts[s] + a2.counts[s] >
            binomial(static_cast<std::int64_t>(a1.n),
                     static_cast<std::int64_t>(s)))
            return false;
    return true;
}

bool check_p_monotone(const std::vector<Rational>& p) {
    for (std::size_t s = 1; s + 1 < p.size(); ++s)
        if (p[s] > p[s + 1]) return false;
    return true;
}

}  // namespace retrieval
