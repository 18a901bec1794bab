#pragma once

#include <gmpxx.h>

namespace collufp {

// Number of binary l1 x m1 matrices of rank exactly k1, as an exact integer.
// Symmetric in (l1, m1); zero when k1 > min(l1, m1).
mpz_class count_rank_matrices(unsigned l1, unsigned m1, unsigned k1);

// Enumeration oracle; requires l1*m1 <= 25.
mpz_class brute_force_rank_count(unsigned l1, unsigned m1, unsigned k1);

}  // namespace collufp
