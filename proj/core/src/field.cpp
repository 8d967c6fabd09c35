#include "retrieval/field.hpp"

#include <string>

namespace retrieval {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic witness set for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
    if (n < 2) return 2;
    while (!is_prime(n)) ++n;
    return n;
}

Field::Field(std::uint64_t p) : p_(p) {
    if (p > 0xFFFFFFFFull)
        throw UnsupportedFieldError("modulus exceeds 32-bit element range: " +
                                    std::to_string(p));
    if (!is_prime(p))
        throw NotPrimeError("modulus is not prime: " + std::to_string(p));
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivideByZeroError("inverse of zero");
    return static_cast<Elem>(powmod(a, p_ - 2, p_));
}

}  // namespace retrieval
