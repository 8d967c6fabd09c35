#pragma once

#include "retrieval/rational.hpp"
#include "retrieval/subset_counts.hpp"

namespace retrieval {

struct RetrievalPair {
    Rational e1;
    Rational e2;
};

/// E = n*H_n - sum_{s=1}^{n-1} alpha(s) / C(n-1, s), exact.
Rational expected_time_from_alpha(const AlphaProfile& alpha);

/// Exact (E1, E2) via exhaustive enumeration of both files' profiles.
RetrievalPair expected_pair(const CodeSpec& code,
                            std::size_t cap = kDefaultEnumerationCap,
                            bool force = false, unsigned threads = 0);

/// beta_i = n (H_n - H_{n-s_i}), the per-file floor on E_i.
Rational beta_floor(std::size_t n, std::size_t s_i);

/// Identity code: E_i = k * H_{s_i}.
Rational closed_identity_E(std::size_t k, std::size_t s_i);

/// File-dedicated MDS block with n_i of n columns: E_i = n (H_{n_i} - H_{n_i - s_i}).
Rational closed_dedicated_E(std::size_t n, std::size_t n_i, std::size_t s_i);

/// Systematic global [n,k] MDS:
/// E_i = n (H_n - H_{n-k}) - n / C(n, s_i) * sum_{s=s_i}^{k-1} C(s, s_i) / (n - s).
Rational closed_global_mds_E(std::size_t n, std::size_t k, std::size_t s_i);

}  // namespace retrieval
