#pragma once

#include <vector>

#include "retrieval/code_model.hpp"
#include "retrieval/rational.hpp"

namespace retrieval {

/// Exact subset-count profile of one target file: counts[s] is the number of
/// s-subsets of the n columns whose span contains the whole file subspace.
struct AlphaProfile {
    std::size_t n = 0;
    std::size_t target_dim = 0;
    std::vector<BigInt> counts;  // indexed by s = 0..n

    const BigInt& at(std::size_t s) const { return counts[s]; }
};

inline constexpr std::size_t kDefaultEnumerationCap = 28;

/// Exact counts by depth-first include/exclude enumeration with an
/// incremental basis carried down the recursion. Deterministic for any
/// worker count. Throws TooLargeError when n exceeds cap and !force.
AlphaProfile alpha_exhaustive(const CodeSpec& code, int file,
                              std::size_t cap = kDefaultEnumerationCap,
                              bool force = false, unsigned threads = 0);

/// Closed form for the identity code I_k: C(k-s_i, s-s_i) for s >= s_i.
AlphaProfile alpha_identity(std::size_t k, std::size_t s_i);

/// Closed form for a systematic [n,k] MDS code.
AlphaProfile alpha_global_mds(std::size_t n, std::size_t k, std::size_t s_i);

/// Closed form for the file's block of a file-dedicated MDS code with n_i
/// dedicated columns out of n.
AlphaProfile alpha_local_mds(std::size_t n, std::size_t n_i, std::size_t s_i);

/// Normalized probabilities p(s) = alpha(s) / C(n, s).
std::vector<Rational> p_profile(const AlphaProfile& alpha);

/// alpha1(s) + alpha2(s) <= C(n, s) for all s < k.
bool check_mutual_exclusivity(const AlphaProfile& a1, const AlphaProfile& a2,
                              std::size_t k);

/// p(s) <= p(s+1) for all 1 <= s <= n-1.
bool check_p_monotone(const std::vector<Rational>& p);

}  // namespace retrieval
