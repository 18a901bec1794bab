#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "collufp/codebook.hpp"

namespace collufp {

// P(Y | X) for the size-t averaging attack: X antipodal with the other t-1
// pirate bits i.i.d. fair, Y = (2j - t)/t where j counts +1 pirates.
struct TransitionMatrix {
    size_t t = 0;
    // prob[x][j], x = 0 for X=-1 and 1 for X=+1, j = 0..t.
    std::vector<std::vector<double>> prob;
};

// Shannon entropy in bits; entries must be nonnegative and sum to 1 (1e-9).
double entropy(const std::vector<double>& pmf);

// Binary entropy H(p, 1-p).
double binary_entropy(double p);

// Root delta < 0.5 of H(delta) = 1 - R; 0.5 at R = 0, 0 for R >= 1.
double gv_distance(double rate);

TransitionMatrix avg_transition_matrix(size_t t);

// I(X;Y) with uniform X under avg_transition_matrix(t).
double mutual_info_avg(size_t t);

// 1 / 2^(t-1).
double md_achievable_rate_avg(size_t t);

// Per-distance pair counts S_c(d). IID enumerates all pairs; linear codes use
// weight enumeration and S_c(d) = (M/2) N_c(d).
struct SpectrumEstimate {
    size_t n = 0;
    double rate = 0;
    CodeKind kind = CodeKind::IID;
    std::map<size_t, mpz_class> pair_counts;  // d -> S_c(d)

    mpz_class total_pairs() const;
};
SpectrumEstimate empirical_distance_spectrum(const Codebook& cb, uint64_t cap = uint64_t{1} << 20);

// Union bound on a random pair being farther than n(1/2 + eps) apart:
// n * 2^{n(2R - 1 + H(1/2 + eps))} / 2^{2nR}, clamped to 1.
double close_pair_prob_bound(size_t n, double rate, double eps);

// P(rank(H_E) < e-1 | H_E not full rank) for a random l x e binary matrix:
// 1 - M_b(l, e, e-1) / (2^{l e} - M_b(l, e, e)), evaluated exactly.
double rank_deficiency_probability(unsigned l, unsigned e);

}  // namespace collufp
