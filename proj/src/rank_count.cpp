#include "collufp/rank_count.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace collufp {

// Row-by-row recursion: appending a row to an a x l matrix of rank b either
// stays in the span (2^b choices) or leaves it (2^l - 2^(b-1) ... counted as
// 2^l - 2^b from the previous rank). Base case: the empty matrix has rank 0.
mpz_class count_rank_matrices(unsigned l1, unsigned m1, unsigned k1) {
    if (k1 > std::min(l1, m1)) return 0;
    const unsigned rows = std::min(l1, m1);
    const unsigned cols = std::max(l1, m1);

    mpz_class two_c = 1;
    two_c <<= cols;

    // counts[b] = number of (a x cols) matrices with rank b, for the current a.
    std::vector<mpz_class> counts(rows + 1, 0);
    counts[0] = 1;
    for (unsigned a = 1; a <= rows; ++a) {
        std::vector<mpz_class> next(rows + 1, 0);
        for (unsigned b = 0; b <= std::min(a, rows); ++b) {
            mpz_class in_span = 1;
            in_span <<= b;
            next[b] = counts[b] * in_span;
            if (b > 0) {
                mpz_class out_of_span = two_c;
                mpz_class span_prev = 1;
                span_prev <<= (b - 1);
                out_of_span -= span_prev;
                next[b] += counts[b - 1] * out_of_span;
            }
        }
        counts.swap(next);
    }
    return counts[k1];
}

mpz_class brute_force_rank_count(unsigned l1, unsigned m1, unsigned k1) {
    if (static_cast<uint64_t>(l1) * m1 > 25)
        throw std::invalid_argument("brute_force_rank_count: l1*m1 must be <= 25");
    if (k1 > std::min(l1, m1)) return 0;
    if (l1 == 0 || m1 == 0) return k1 == 0 ? 1 : 0;

    const uint64_t total = uint64_t{1} << (l1 * m1);
    uint64_t hits = 0;
    std::vector<uint32_t> row(l1);
    for (uint64_t code = 0; code < total; ++code) {
        for (unsigned r = 0; r < l1; ++r)
            row[r] = static_cast<uint32_t>((code >> (r * m1)) & ((1u << m1) - 1));
        // Gaussian elimination on machine-word rows.
        unsigned rk = 0;
        for (unsigned c = 0; c < m1 && rk < l1; ++c) {
            unsigned sel = rk;
            while (sel < l1 && !((row[sel] >> c) & 1)) ++sel;
            if (sel == l1) continue;
            std::swap(row[rk], row[sel]);
            for (unsigned r = rk + 1; r < l1; ++r)
                if ((row[r] >> c) & 1) row[r] ^= row[rk];
            ++rk;
        }
        if (rk == k1) ++hits;
    }
    return mpz_class(static_cast<unsigned long>(hits));
}

}  // namespace collufp
