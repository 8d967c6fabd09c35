#pragma once

#include <cstdint>

#include "retrieval/errors.hpp"

namespace retrieval {

using Elem = std::uint32_t;

/// Prime field GF(p). Immutable; all operations are pure.
/// Elements are canonical representatives in [0, p).
class Field {
public:
    /// Throws NotPrimeError for composite p, UnsupportedFieldError when p
    /// does not fit the machine-word modular range.
    explicit Field(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Elem add(Elem a, Elem b) const {
        const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    Elem sub(Elem a, Elem b) const {
        return a >= b ? a - b : static_cast<Elem>(a + p_ - b);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// Throws DivideByZeroError on inv(0).
    Elem inv(Elem a) const;

    bool operator==(const Field& other) const { return p_ == other.p_; }

private:
    std::uint64_t p_;
};

/// Deterministic primality test for 64-bit integers (trial division up to
/// 2^16, then Miller-Rabin on a fixed witness set).
bool is_prime(std::uint64_t n);

/// Smallest prime >= n (n >= 0).
std::uint64_t next_prime_at_least(std::uint64_t n);

}  // namespace retrieval
