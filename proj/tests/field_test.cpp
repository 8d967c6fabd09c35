#include "doctest.h"

#include "retrieval/field.hpp"

using namespace retrieval;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(4294967291ull));
    CHECK_FALSE(is_prime(4294967295ull));
    CHECK(next_prime_at_least(8) == 11);
    CHECK(next_prime_at_least(11) == 11);
    CHECK(next_prime_at_least(0) == 2);
}

TEST_CASE("field construction validates the modulus") {
    CHECK_THROWS_AS(Field(4), NotPrimeError);
    CHECK_THROWS_AS(Field(1), NotPrimeError);
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(4294967291ull));
}

TEST_CASE("arithmetic in GF(7)") {
    const Field f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(3) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(5, 5) == 4);
    for (Elem a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(f.inv(0), DivideByZeroError);
}

TEST_CASE("arithmetic at a large modulus") {
    const Field f(4294967291ull);
    const Elem a = 4294967290u;
    CHECK(f.mul(a, a) == 1);  // (-1)^2
    CHECK(f.mul(a, f.inv(a)) == 1);
}
