#include "doctest.h"

#include "retrieval/constructions.hpp"
#include "retrieval/subset_counts.hpp"

using namespace retrieval;

TEST_CASE("cycle code subset counts match the known profile") {
    const CodeSpec code = make_hybrid_cycle(4, 1);
    const AlphaProfile a2 = alpha_exhaustive(code, 2);
    CHECK(a2.at(0) == 0);
    CHECK(a2.at(1) == 0);
    CHECK(a2.at(2) == 0);
    CHECK(a2.at(3) == 8);
    CHECK(a2.at(4) == 50);
    CHECK(a2.at(5) == 53);
    CHECK(a2.at(6) == 28);
    CHECK(a2.at(7) == 8);
    CHECK(a2.at(8) == 1);
}

TEST_CASE("global MDS subset counts match the known profile") {
    const CodeSpec code = make_global_mds(8, 4, 1);
    const AlphaProfile a2 = alpha_exhaustive(code, 2);
    const BigInt expected[] = {0, 0, 0, 1, 70, 56, 28, 8, 1};
    for (std::size_t s = 0; s <= 8; ++s) CHECK(a2.at(s) == expected[s]);
    // closed form agrees
    const AlphaProfile closed = alpha_global_mds(8, 4, 3);
    for (std::size_t s = 0; s <= 8; ++s) CHECK(closed.at(s) == expected[s]);
}

TEST_CASE("identity closed form matches enumeration") {
    const CodeSpec code = make_identity(5, 2);
    for (int file = 1; file <= 2; ++file) {
        const AlphaProfile ex = alpha_exhaustive(code, file);
        const AlphaProfile cl = alpha_identity(5, code.file_dim(file));
        for (std::size_t s = 0; s <= 5; ++s) CHECK(ex.at(s) == cl.at(s));
    }
}

TEST_CASE("dedicated closed form matches enumeration") {
    const CodeSpec code = make_dedicated(3, 5, 2, 2);
    const AlphaProfile e1 = alpha_exhaustive(code, 1);
    const AlphaProfile c1 = alpha_local_mds(8, 3, 2);
    const AlphaProfile e2 = alpha_exhaustive(code, 2);
    const AlphaProfile c2 = alpha_local_mds(8, 5, 2);
    for (std::size_t s = 0; s <= 8; ++s) {
        CHECK(e1.at(s) == c1.at(s));
        CHECK(e2.at(s) == c2.at(s));
    }
}

TEST_CASE("profile invariants on the cycle code") {
    const CodeSpec code = make_hybrid_cycle(4, 1);
    const AlphaProfile a1 = alpha_exhaustive(code, 1);
    const AlphaProfile a2 = alpha_exhaustive(code, 2);
    CHECK(check_mutual_exclusivity(a1, a2, code.k()));
    CHECK(check_p_monotone(p_profile(a1)));
    CHECK(check_p_monotone(p_profile(a2)));
    // total subsets of full size always qualify
    CHECK(a1.at(8) == 1);
}

TEST_CASE("enumeration is thread-count invariant") {
    const CodeSpec code = make_global_mds(9, 4, 2);
    const AlphaProfile seq = alpha_exhaustive(code, 1, 28, false, 1);
    const AlphaProfile par = alpha_exhaustive(code, 1, 28, false, 4);
    for (std::size_t s = 0; s <= 9; ++s) CHECK(seq.at(s) == par.at(s));

    const CodeSpec packed = make_hybrid_cycle(5, 2);
    const AlphaProfile pseq = alpha_exhaustive(packed, 2, 28, false, 1);
    const AlphaProfile ppar = alpha_exhaustive(packed, 2, 28, false, 3);
    for (std::size_t s = 0; s <= 10; ++s) CHECK(pseq.at(s) == ppar.at(s));
}

TEST_CASE("enumeration cap") {
    const CodeSpec big = make_identity(30, 29);
    CHECK_THROWS_AS(alpha_exhaustive(big, 1), TooLargeError);
    // force-override still works; the high file dimension keeps it cheap
    const AlphaProfile forced = alpha_exhaustive(big, 1, 28, /*force=*/true);
    const AlphaProfile closed = alpha_identity(30, 29);
    for (std::size_t s = 0; s <= 30; ++s) CHECK(forced.at(s) == closed.at(s));
}
