#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mline/dictionary.hpp"
#include "mline/steenrod.hpp"

using namespace mline;

TEST_CASE("tau") {
    CHECK(tau(0) == 0);
    CHECK(tau(1) == 0);
    CHECK(tau(2) == 1);
    CHECK(tau(3) == 1);
    CHECK(tau(4) == 1);
    CHECK(tau(5) == 2);
    CHECK(tau(7) == 2);
    CHECK_THROWS_AS(tau(8), std::invalid_argument);
}

TEST_CASE("h0") {
    CHECK(h0(4) == 1);
    CHECK(h0(12) == 9);
    CHECK(h0(11) == 3);  // 11 = 4 + 8*0 + 7
    CHECK_THROWS_AS(h0(3), std::invalid_argument);
}

TEST_CASE("h_walk base case and composition") {
    CHECK(h_walk(5, 4, 3) == 2);  // 3+5 = 0 mod 4
    CHECK(h_walk(6, 4, 2) == 1);  // drop at column 6, hold at column 5
    CHECK(!h_walk(9, 3, std::nullopt).has_value());  // infinity is fixed
    CHECK_THROWS_AS(h_walk(3, 3, 1), std::invalid_argument);
}

TEST_CASE("h_walk residue invariances") {
    for (long m = 5; m <= 20; ++m)
        for (long n = 1; n < m; ++n)
            for (long l = -3; l <= 12; ++l) {
                CHECK(h_walk(m, n, l) == h_walk(m + 4, n + 4, l));
                CHECK(*h_walk(m, n, l + 4) == *h_walk(m, n, l) + 4);
            }
}

TEST_CASE("mahowald_line explicit values") {
    CHECK(mahowald_line(0) == -1);
    CHECK(mahowald_line(1) == -1);
    CHECK(mahowald_line(2) == -1);
    CHECK(mahowald_line(3) == 0);
    CHECK(mahowald_line(20) == 16);  // 16k+4 at k=1
    CHECK(mahowald_line(19) == 10);  // even-k 8k+3 rule at k=2
    CHECK(mahowald_line(11) == 6);   // odd-k 8k+3 rule at k=1

    // the sixteen-row table at k = 1 and k = 2
    const long row[16] = {0, 0, 1, 1, 1, 2, 2, 6, 8, 8, 9, 9, 9, 10, 10, 10};
    for (long k = 1; k <= 2; ++k)
        for (int r = 0; r < 16; ++r)
            CHECK(mahowald_line(16 * k + 4 + r) == 16 * k + row[r]);
}

TEST_CASE("the cell just above the line exists") {
    // L(m) itself may sit at an empty dimension (m = 6 for instance); the
    // first obstructed cell L(m)+1 is always present.
    for (long m = 3; m <= 200; ++m)
        CHECK(cell_exists(static_cast<int>(m), static_cast<int>(mahowald_line(m)) + 1));
}

TEST_CASE("line bounds from the staircase") {
    for (long k = 1; k <= 24; ++k) {
        long v = mahowald_line(8 * k + 3);
        CHECK(v <= 8 * k - 2);
        CHECK(v == (k % 2 == 1 ? 8 * k - 2 : 8 * k - 6));
    }
    for (long k = 0; k <= 24; ++k)
        for (int r = 0; r <= 6; ++r)
            CHECK(mahowald_line(8 * k + 4 + r) >= 8 * k + tau(r));
}

TEST_CASE("fm_exists worked examples") {
    CHECK(fm_exists(1, 3).exists);    // K3
    CHECK(!fm_exists(8, 19).exists);  // p = 0 mod 8 requires 2p+4
    CHECK(fm_exists(2, 6).exists);
    CHECK_THROWS_AS(fm_exists(0, 4), std::invalid_argument);
}

TEST_CASE("main_theorem_bound") {
    CHECK(main_theorem_bound(5) == 12);  // Schmidt's level-(5,12) class
    CHECK(main_theorem_bound(8) == 20);
    CHECK(main_theorem_bound(4) == 11);
    CHECK(main_theorem_bound(2) == 6);
    CHECK_THROWS_AS(main_theorem_bound(1), std::invalid_argument);
}

TEST_CASE("dictionary keystone on a small grid") {
    for (long p = 2; p <= 64; ++p) {
        long bound = main_theorem_bound(p);
        for (long q = 1; q <= 4 * p + 8; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(fm_exists(p, q).exists == (q >= bound));
        }
    }
}

TEST_CASE("fm_exists monotonicity") {
    for (long p = 2; p <= 40; ++p)
        for (long q = 1; q <= 4 * p + 8; ++q)
            if (fm_exists(p, q).exists) {
                CHECK(fm_exists(p, q + 1).exists);
                CHECK(fm_exists(p - 1, q).exists);
            }
}

TEST_CASE("minv_degree") {
    CHECK(minv_degree(11) == 4);
    CHECK(minv_degree(20) == 9);
    CHECK(minv_degree(4) == 1);
    CHECK_THROWS_AS(minv_degree(3), std::invalid_argument);
    for (long q = 4; q <= 256; ++q)
        CHECK_NOTHROW(minv_degree(q));  // internal table assertion
}

TEST_CASE("minv_degree is the maximum existing level") {
    for (long q = 4; q <= 64; ++q) {
        long v = minv_degree(q);
        CHECK(fm_exists(v, q).exists);
        CHECK(!fm_exists(v + 1, q).exists);
    }
}

TEST_CASE("spin_geography") {
    CHECK(spin_geography(1, 3).verdict == Geography::NotObstructedHere);  // K3
    CHECK(spin_geography(8, 19).verdict == Geography::Obstructed);
    CHECK(spin_geography(0, 0).verdict == Geography::NotObstructedHere);  // S^4
    CHECK(spin_geography(0, 1).verdict == Geography::NotObstructedHere);  // S^2 x S^2
    CHECK(spin_geography(0, 5).verdict == Geography::NotObstructedHere);
    CHECK(spin_geography(1, 2).verdict == Geography::Obstructed);
    CHECK(spin_geography(2, 5).verdict == Geography::Obstructed);
    CHECK(spin_geography(2, 6).verdict == Geography::NotObstructedHere);
}

TEST_CASE("b2_sign_check") {
    CHECK(b2_sign_check(22, -16, true));   // K3 exempt
    CHECK(b2_sign_check(24, 16, false));   // boundary equality
    CHECK(!b2_sign_check(23, 16, false));
}
