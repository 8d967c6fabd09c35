#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "retrieval/code_model.hpp"

namespace retrieval {

inline constexpr std::uint64_t kTrialDrawCap = 10'000'000;

/// Draw counts of one uniform-with-replacement retrieval trial.
struct TrialResult {
    std::uint64_t t1 = 0;     // first time file 1 is in the drawn span
    std::uint64_t t2 = 0;
    std::uint64_t proj1 = 0;  // first time the file-1 projections span file 1
    std::uint64_t proj2 = 0;
};

/// One trial with an explicit per-trial seed. Columns are drawn uniformly
/// (rejection-sampled, no modulo bias) until both files are recovered.
/// Throws TrialOverflowError past the hard draw cap.
TrialResult single_trial(const CodeSpec& code, std::uint64_t trial_seed);

struct SimMeans {
    double t1 = 0, t2 = 0, max = 0, min = 0, proj1 = 0, proj2 = 0;
};

struct SimEstimate {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    SimMeans means;
    std::optional<SimMeans> stderrs;  // absent when trials == 1
};

/// Seeded Monte Carlo estimate. Deterministic for fixed (code, trials, seed)
/// regardless of worker count: every trial derives its own xoshiro256**
/// stream from a splitmix64 hash of (seed, trial index), and reduction is an
/// order-independent integer sum.
SimEstimate simulate(const CodeSpec& code, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads = 0);

/// {"schema":1, trials, seed, means{...}, stderr{...}} with decimal strings.
std::string to_json(const SimEstimate& estimate);

/// Per-trial seed derivation, exposed for reproducibility tests.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial);

}  // namespace retrieval
