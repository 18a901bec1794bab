#include <doctest.h>

#include "collufp/rank_count.hpp"

using namespace collufp;

TEST_CASE("single-row counts") {
    for (unsigned l = 1; l <= 6; ++l) {
        CHECK(count_rank_matrices(1, l, 0) == 1);
        mpz_class nonzero = 1;
        nonzero <<= l;
        nonzero -= 1;
        CHECK(count_rank_matrices(1, l, 1) == nonzero);
    }
}

TEST_CASE("small fixed values") {
    CHECK(count_rank_matrices(2, 2, 2) == 6);
    CHECK(count_rank_matrices(3, 2, 1) == 21);
    CHECK(count_rank_matrices(3, 2, 2) == 42);
    CHECK(count_rank_matrices(2, 2, 0) == 1);
    CHECK(brute_force_rank_count(2, 2, 0) == 1);
    CHECK(brute_force_rank_count(2, 2, 2) == 6);
}

TEST_CASE("closed form equals enumeration for all small shapes") {
    for (unsigned l = 1; l <= 4; ++l)
        for (unsigned m = 1; m <= 4; ++m)
            for (unsigned k = 0; k <= std::min(l, m) + 1; ++k)
                CHECK(count_rank_matrices(l, m, k) == brute_force_rank_count(l, m, k));
}

TEST_CASE("rank above min dimension is impossible") {
    CHECK(count_rank_matrices(3, 2, 3) == 0);
    CHECK(count_rank_matrices(2, 5, 4) == 0);
}

TEST_CASE("symmetry in the two dimensions") {
    for (unsigned l = 1; l <= 5; ++l)
        for (unsigned m = 1; m <= 5; ++m)
            for (unsigned k = 0; k <= std::min(l, m); ++k)
                CHECK(count_rank_matrices(l, m, k) == count_rank_matrices(m, l, k));
}

TEST_CASE("counts partition the full matrix space") {
    for (unsigned l = 1; l <= 6; ++l)
        for (unsigned m = 1; m <= 6; ++m) {
            mpz_class sum = 0;
            for (unsigned k = 0; k <= std::min(l, m); ++k) sum += count_rank_matrices(l, m, k);
            mpz_class all = 1;
            all <<= l * m;
            CHECK(sum == all);
        }
    CHECK(brute_force_rank_count(3, 3, 0) + brute_force_rank_count(3, 3, 1) +
              brute_force_rank_count(3, 3, 2) + brute_force_rank_count(3, 3, 3) ==
          512);
}

TEST_CASE("near-full-rank identity") {
    // M_b(l, e, e-1) = M_b(e-1, l, e-1) * (2^e - 1) for l >= e.
    for (unsigned e = 1; e <= 4; ++e)
        for (unsigned l = e; l <= 7; ++l) {
            mpz_class factor = 1;
            factor <<= e;
            factor -= 1;
            CHECK(count_rank_matrices(l, e, e - 1) == count_rank_matrices(e - 1, l, e - 1) * factor);
        }
}

TEST_CASE("full-rank product formula") {
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned l = r; l <= 6; ++l) {
            mpz_class prod = 1;
            for (unsigned p = 0; p < r; ++p) {
                mpz_class term = 1;
                term <<= l;
                mpz_class sub = 1;
                sub <<= p;
                prod *= term - sub;
            }
            CHECK(count_rank_matrices(r, l, r) == prod);
        }
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS((void)brute_force_rank_count(6, 5, 3), std::invalid_argument);
}
