#include "retrieval/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <vector>

#include "retrieval/errors.hpp"
#include "retrieval/threads.hpp"

#include "json.hpp"

namespace retrieval {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

// xoshiro256** seeded through splitmix64 so that nearby seeds still give
// unrelated states.
struct Xoshiro256 {
    std::uint64_t s[4];

    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t state = seed;
        for (auto& word : s) {
            state += 0x9e3779b97f4a7c15ull;
            word = splitmix64(state);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }
};

// Unbiased uniform index in [0, n) via rejection below the largest multiple
// of n that fits in 64 bits.
std::size_t draw_index(Xoshiro256& rng, std::uint64_t n) {
    const std::uint64_t reject_below = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = rng.next();
        if (x >= reject_below) return static_cast<std::size_t>(x % n);
    }
}

// Column data precomputed once per simulation. Col is either a packed
// std::uint64_t (GF(2), k <= 64) or a Vec.
template <class Col>
struct EngineData {
    std::size_t n = 0, s1 = 0, s2 = 0;
    std::vector<Col> cols;
    std::vector<Col> proj1, proj2;   // per-file coordinates of each column
    std::vector<Col> seed1, seed2;   // file bases, preloaded into joint bases
};

template <class Basis, class Col, class MakeBasis>
TrialResult run_trial(const EngineData<Col>& e, Xoshiro256& rng,
                      MakeBasis make_basis) {
    Basis span = make_basis(e.s1 + e.s2);
    Basis joint1 = make_basis(e.s1 + e.s2);
    Basis joint2 = make_basis(e.s1 + e.s2);
    Basis p1 = make_basis(e.s1);
    Basis p2 = make_basis(e.s2);
    for (const Col& v : e.seed1) joint1.insert(v);
    for (const Col& v : e.seed2) joint2.insert(v);

    // gap_i = rank(joint_i) - rank(span); file i is recovered when it hits 0.
    std::size_t gap1 = e.s1, gap2 = e.s2;
    TrialResult r;
    for (std::uint64_t t = 1; t <= kTrialDrawCap; ++t) {
        const std::size_t j = draw_index(rng, e.n);
        const bool grew = span.insert(e.cols[j]);
        if (gap1 > 0) {
            const bool grew1 = joint1.insert(e.cols[j]);
            if (grew && !grew1 && --gap1 == 0) r.t1 = t;
        }
        if (gap2 > 0) {
            const bool grew2 = joint2.insert(e.cols[j]);
            if (grew && !grew2 && --gap2 == 0) r.t2 = t;
        }
        if (r.proj1 == 0 && p1.insert(e.proj1[j]) &&
            static_cast<std::size_t>(p1.rank()) == e.s1)
            r.proj1 = t;
        if (r.proj2 == 0 && p2.insert(e.proj2[j]) &&
            static_cast<std::size_t>(p2.rank()) == e.s2)
            r.proj2 = t;
        if (r.t1 && r.t2 && r.proj1 && r.proj2) return r;
    }
    throw TrialOverflowError(0, "trial exceeded the hard draw cap");
}

// Thin adapters so the packed and generic bases share run_trial verbatim.
struct PackedBasis {
    Gf2Basis b;
    bool insert(std::uint64_t v) { return b.insert(v); }
    int rank() const { return b.rank; }
};

struct GenericBasis {
    IncrementalBasis b;
    GenericBasis(const Field& f, std::size_t dim) : b(f, dim) {}
    bool insert(const Vec& v) { return b.insert(v); }
    std::size_t rank() const { return b.rank(); }
};

bool use_packed(const CodeSpec& code) {
    return code.field().modulus() == 2 && code.k() <= kPackedMaxRows;
}

EngineData<std::uint64_t> build_packed(const CodeSpec& code) {
    EngineData<std::uint64_t> e;
    e.n = code.n();
    e.s1 = code.partition().s1;
    e.s2 = code.partition().s2;
    const std::uint64_t mask1 = (e.s1 == 64) ? ~0ull : ((1ull << e.s1) - 1);
    for (std::size_t j = 0; j < e.n; ++j) {
        const std::uint64_t w = pack_gf2(code.matrix().column(j));
        e.cols.push_back(w);
        e.proj1.push_back(w & mask1);
        e.proj2.push_back(w >> e.s1);
    }
    for (std::size_t i = 0; i < e.s1; ++i) e.seed1.push_back(1ull << i);
    for (std::size_t i = 0; i < e.s2; ++i) e.seed2.push_back(1ull << (e.s1 + i));
    return e;
}

EngineData<Vec> build_generic(const CodeSpec& code) {
    EngineData<Vec> e;
    e.n = code.n();
    e.s1 = code.partition().s1;
    e.s2 = code.partition().s2;
    e.cols = code.matrix().columns();
    e.proj1 = project_columns(code, 1).columns();
    e.proj2 = project_columns(code, 2).columns();
    e.seed1 = code.file_basis(1);
    e.seed2 = code.file_basis(2);
    return e;
}

TrialResult checked_trial(const CodeSpec& code, std::uint64_t trial_seed) {
    Xoshiro256 rng(trial_seed);
    TrialResult r;
    if (use_packed(code)) {
        const EngineData<std::uint64_t> e = build_packed(code);
        r = run_trial<PackedBasis>(e, rng, [](std::size_t) { return PackedBasis{}; });
    } else {
        const EngineData<Vec> e = build_generic(code);
        const Field& f = code.field();
        r = run_trial<GenericBasis>(
            e, rng, [&f](std::size_t dim) { return GenericBasis(f, dim); });
    }
    return r;
}

// Integer accumulators: exact, so the reduction order cannot matter.
struct Sums {
    unsigned __int128 t1 = 0, t2 = 0, mx = 0, mn = 0, p1 = 0, p2 = 0;
    unsigned __int128 t1sq = 0, t2sq = 0, mxsq = 0, mnsq = 0, p1sq = 0, p2sq = 0;

    void add(const TrialResult& r) {
        const std::uint64_t mx_v = std::max(r.t1, r.t2);
        const std::uint64_t mn_v = std::min(r.t1, r.t2);
        t1 += r.t1;
        t2 += r.t2;
        mx += mx_v;
        mn += mn_v;
        p1 += r.proj1;
        p2 += r.proj2;
        t1sq += static_cast<unsigned __int128>(r.t1) * r.t1;
        t2sq += static_cast<unsigned __int128>(r.t2) * r.t2;
        mxsq += static_cast<unsigned __int128>(mx_v) * mx_v;
        mnsq += static_cast<unsigned __int128>(mn_v) * mn_v;
        p1sq += static_cast<unsigned __int128>(r.proj1) * r.proj1;
        p2sq += static_cast<unsigned __int128>(r.proj2) * r.proj2;
    }

    void merge(const Sums& o) {
        t1 += o.t1;
        t2 += o.t2;
        mx += o.mx;
        mn += o.mn;
        p1 += o.p1;
        p2 += o.p2;
        t1sq += o.t1sq;
        t2sq += o.t2sq;
        mxsq += o.mxsq;
        mnsq += o.mnsq;
        p1sq += o.p1sq;
        p2sq += o.p2sq;
    }
};

double mean_of(unsigned __int128 sum, std::uint64_t trials) {
    return static_cast<double>(sum) / static_cast<double>(trials);
}

double stderr_of(unsigned __int128 sum, unsigned __int128 sumsq,
                 std::uint64_t trials) {
    const long double n = static_cast<long double>(trials);
    const long double s = static_cast<long double>(sum);
    const long double variance =
        (static_cast<long double>(sumsq) - s * s / n) / (n - 1);
    return static_cast<double>(
        std::sqrt(std::max<long double>(variance, 0) / n));
}

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class Col, class MakeBasis, class BasisTag>
Sums run_range(const EngineData<Col>& e, std::uint64_t master_seed,
               std::uint64_t first, std::uint64_t last, MakeBasis make_basis,
               BasisTag) {
    Sums sums;
    for (std::uint64_t trial = first; trial < last; ++trial) {
        Xoshiro256 rng(derive_trial_seed(master_seed, trial));
        TrialResult r;
        try {
            r = run_trial<BasisTag>(e, rng, make_basis);
        } catch (TrialOverflowError& err) {
            err.trial = trial;
            throw;
        }
        sums.add(r);
    }
    return sums;
}

template <class Col, class MakeBasis, class BasisTag>
Sums run_all(const EngineData<Col>& e, std::uint64_t trials,
             std::uint64_t master_seed, unsigned workers, MakeBasis make_basis,
             BasisTag tag) {
    if (workers <= 1 || trials < 2 * workers)
        return run_range(e, master_seed, 0, trials, make_basis, tag);

    std::vector<Sums> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t first = w * chunk;
            const std::uint64_t last = std::min(trials, first + chunk);
            try {
                if (first < last)
                    partial[w] =
                        run_range(e, master_seed, first, last, make_basis, tag);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    Sums total;
    for (const Sums& s : partial) total.merge(s);
    return total;
}

}  // namespace

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return splitmix64(master_seed ^ splitmix64(trial));
}

TrialResult single_trial(const CodeSpec& code, std::uint64_t trial_seed) {
    const TrialResult r = checked_trial(code, trial_seed);
    if (std::max(r.t1, r.t2) + std::min(r.t1, r.t2) != r.t1 + r.t2)
        throw std::logic_error("max/min identity violated");
    return r;
}

SimEstimate simulate(const CodeSpec& code, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads) {
    if (trials < 1) throw InputError("need at least one trial");
    const unsigned workers = resolve_threads(threads);

    Sums sums;
    if (use_packed(code)) {
        const EngineData<std::uint64_t> e = build_packed(code);
        sums = run_all(e, trials, seed, workers,
                       [](std::size_t) { return PackedBasis{}; },
                       PackedBasis{});
    } else {
        const EngineData<Vec> e = build_generic(code);
        const Field& f = code.field();
        sums = run_all(e, trials, seed, workers,
                       [&f](std::size_t dim) { return GenericBasis(f, dim); },
                       GenericBasis(f, 1));
    }

    SimEstimate out;
    out.trials = trials;
    out.seed = seed;
    out.means = SimMeans{mean_of(sums.t1, trials), mean_of(sums.t2, trials),
                         mean_of(sums.mx, trials), mean_of(sums.mn, trials),
                         mean_of(sums.p1, trials), mean_of(sums.p2, trials)};
    if (trials > 1)
        out.stderrs = SimMeans{stderr_of(sums.t1, sums.t1sq, trials),
                               stderr_of(sums.t2, sums.t2sq, trials),
                               stderr_of(sums.mx, sums.mxsq, trials),
                               stderr_of(sums.mn, sums.mnsq, trials),
                               stderr_of(sums.p1, sums.p1sq, trials),
                               stderr_of(sums.p2, sums.p2sq, trials)};
    return out;
}

std::string to_json(const SimEstimate& estimate) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["trials"] = estimate.trials;
    j["seed"] = estimate.seed;
    auto pack = [](const SimMeans& m) {
        nlohmann::ordered_json o;
        o["t1"] = decimal(m.t1);
        o["t2"] = decimal(m.t2);
        o["max"] = decimal(m.max);
        o["min"] = decimal(m.min);
        o["proj1"] = decimal(m.proj1);
        o["proj2"] = decimal(m.proj2);
        return o;
    };
    j["means"] = pack(estimate.means);
    if (estimate.stderrs)
        j["stderr"] = pack(*estimate.stderrs);
    else
        j["stderr"] = nullptr;
    return j.dump(2);
}

}  // namespace retrieval
