#include "collufp/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "collufp/rank_count.hpp"

namespace collufp {

double entropy(const std::vector<double>& pmf) {
    double sum = 0;
    double h = 0;
    for (double p : pmf) {
        if (p < 0) throw std::invalid_argument("entropy: negative probability");
        sum += p;
        if (p > 0) h -= p * std::log2(p);
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("entropy: pmf does not sum to 1");
    return h;
}

double binary_entropy(double p) {
    if (p < 0 || p > 1) throw std::invalid_argument("binary_entropy: p outside [0,1]");
    double h = 0;
    if (p > 0) h -= p * std::log2(p);
    if (p < 1) h -= (1 - p) * std::log2(1 - p);
    return h;
}

double gv_distance(double rate) {
    if (rate < 0) throw std::invalid_argument("gv_distance: rate must be >= 0");
    if (rate >= 1) return 0;
    if (rate == 0) return 0.5;
    double lo = 0, hi = 0.5;
    const double target = 1 - rate;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double binom_coeff(size_t n, size_t k) {
    double c = 1;
    for (size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return c;
}

}  // namespace

TransitionMatrix avg_transition_matrix(size_t t) {
    if (t < 2) throw std::invalid_argument("avg_transition_matrix: need t >= 2");
    TransitionMatrix tm;
    tm.t = t;
    tm.prob.assign(2, std::vector<double>(t + 1, 0.0));
    const double scale = std::pow(2.0, -static_cast<double>(t - 1));
    for (size_t j = 0; j <= t; ++j) {
        // X = -1 contributes no +1; the other t-1 pirates supply all j.
        if (j <= t - 1) tm.prob[0][j] = binom_coeff(t - 1, j) * scale;
        // X = +1 supplies one +1; the others supply j-1.
        if (j >= 1) tm.prob[1][j] = binom_coeff(t - 1, j - 1) * scale;
    }
    return tm;
}

double mutual_info_avg(size_t t) {
    const TransitionMatrix tm = avg_transition_matrix(t);
    std::vector<double> marginal(t + 1, 0.0);
    for (size_t j = 0; j <= t; ++j) marginal[j] = 0.5 * (tm.prob[0][j] + tm.prob[1][j]);
    // Both conditional rows have the same entropy by symmetry.
    std::vector<double> row = tm.prob[0];
    return entropy(marginal) - entropy(row);
}

double md_achievable_rate_avg(size_t t) {
    if (t < 2) throw std::invalid_argument("md_achievable_rate_avg: need t >= 2");
    return std::pow(2.0, -static_cast<double>(t - 1));
}

mpz_class SpectrumEstimate::total_pairs() const {
    mpz_class s = 0;
    for (const auto& [d, c] : pair_counts) s += c;
    return s;
}

SpectrumEstimate empirical_distance_spectrum(const Codebook& cb, uint64_t cap) {
    if (!cb.exact_users() || cb.num_users() > cap)
        throw std::invalid_argument("empirical_distance_spectrum: codebook exceeds cap");
    SpectrumEstimate out;
    out.n = cb.n();
    out.rate = cb.rate();
    out.kind = cb.kind();
    const uint64_t m = cb.num_users();

    if (cb.kind() == CodeKind::Linear) {
        // Weight enumeration: by linearity N_c(d) is the number of codewords
        // at weight d, and S_c(d) = (M/2) N_c(d).
        mpz_class half_m(static_cast<unsigned long>(m));
        half_m /= 2;
        for (uint64_t u = 1; u < m; ++u) {
            const size_t w = cb.codeword(u).popcount();
            out.pair_counts[w] += half_m;
        }
        return out;
    }

    std::vector<BitWord> words;
    words.reserve(m);
    for (uint64_t u = 0; u < m; ++u) words.push_back(cb.codeword(u));
    for (uint64_t i = 0; i < m; ++i)
        for (uint64_t j = 0; j < i; ++j) out.pair_counts[words[i].hamming(words[j])] += 1;
    return out;
}

double close_pair_prob_bound(size_t n, double rate, double eps) {
    if (eps <= 0) throw std::invalid_argument("close_pair_prob_bound: eps must be > 0");
    const double log2_bound = std::log2(static_cast<double>(n)) +
                              static_cast<double>(n) * (2 * rate - 1 + binary_entropy(std::min(0.5 + eps, 1.0))) -
                              2.0 * static_cast<double>(n) * rate;
    return std::min(1.0, std::exp2(log2_bound));
}

double rank_deficiency_probability(unsigned l, unsigned e) {
    if (e < 1) throw std::invalid_argument("rank_deficiency_probability: need e >= 1");
    mpz_class denom = 1;
    denom <<= static_cast<unsigned long>(l) * e;
    denom -= count_rank_matrices(l, e, e);
    if (denom == 0)
        throw std::invalid_argument("rank_deficiency_probability: every matrix is full rank");
    mpq_class frac(count_rank_matrices(l, e, e - 1), denom);
    frac.canonicalize();
    return 1.0 - frac.get_d();
}

}  // namespace collufp
