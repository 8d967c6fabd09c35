#include "retrieval/expectation.hpp"

namespace retrieval {

Rational expected_time_from_alpha(const AlphaProfile& alpha) {
    const std::size_t n = alpha.n;
    Rational e = Rational(n) * harmonic(n);
    for (std::size_t s = 1; s <= n - 1; ++s)
        e -= Rational(alpha.counts[s],
                      binomial(static_cast<std::int64_t>(n - 1),
                               static_cast<std::int64_t>(s)));
    return e;
}

RetrievalPair expected_pair(const CodeSpec& code, std::size_t cap, bool force,
                            unsigned threads) {
    return RetrievalPair{
        expected_time_from_alpha(alpha_exhaustive(code, 1, cap, force, threads)),
        expected_time_from_alpha(alpha_exhaustive(code, 2, cap, force, threads))};
}

Rational beta_floor(std::size_t n, std::size_t s_i) {
    return Rational(n) * (harmonic(n) - harmonic(n - s_i));
}

Rational closed_identity_E(std::size_t k, std::size_t s_i) {
    return Rational(k) * harmonic(s_i);
}

Rational closed_dedicated_E(std::size_t n, std::size_t n_i, std::size_t s_i) {
    return Rational(n) * (harmonic(n_i) - harmonic(n_i - s_i));
}

Rational closed_global_mds_E(std::size_t n, std::size_t k, std::size_t s_i) {
    Rational e = Rational(n) * (harmonic(n) - harmonic(n - k));
    Rational tail = 0;
    for (std::size_t s = s_i; s <= k - 1; ++s)
        tail += Rational(binomial(static_cast<std::int64_t>(s),
                                  static_cast<std::int64_t>(s_i)),
                         n - s);
    e -= Rational(n) * tail /
         Rational(binomial(static_cast<std::int64_t>(n),
                           static_cast<std::int64_t>(s_i)));
    return e;
}

}  // namespace retrieval
