#include <doctest.h>

#include <cmath>

#include "collufp/analysis.hpp"

using namespace collufp;

TEST_CASE("entropy basics") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(1 - binary_entropy(0.25) == doctest::Approx(0.18872).epsilon(1e-4));
    CHECK(entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)entropy({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS((void)entropy({-0.1, 1.1}), std::invalid_argument);
}

TEST_CASE("gv distance") {
    CHECK(gv_distance(1.2) == 0.0);
    CHECK(gv_distance(1.0) == 0.0);
    CHECK(gv_distance(0.0) == doctest::Approx(0.5));
    CHECK(gv_distance(0.5) == doctest::Approx(0.1100).epsilon(1e-3));
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9})
        CHECK(binary_entropy(gv_distance(r)) == doctest::Approx(1 - r).epsilon(1e-8));
}

TEST_CASE("transition matrix for two and three pirates") {
    const TransitionMatrix t2 = avg_transition_matrix(2);
    CHECK(t2.prob[0] == std::vector<double>{0.5, 0.5, 0.0});
    CHECK(t2.prob[1] == std::vector<double>{0.0, 0.5, 0.5});

    const TransitionMatrix t3 = avg_transition_matrix(3);
    CHECK(t3.prob[0] == std::vector<double>{0.25, 0.5, 0.25, 0.0});
    CHECK(t3.prob[1] == std::vector<double>{0.0, 0.25, 0.5, 0.25});

    for (size_t t = 2; t <= 6; ++t) {
        const TransitionMatrix tm = avg_transition_matrix(t);
        for (int x = 0; x < 2; ++x) {
            double sum = 0;
            for (double p : tm.prob[x]) sum += p;
            CHECK(sum == doctest::Approx(1.0));
        }
        // Uniform-input marginal is Binomial(t, 1/2).
        for (size_t j = 0; j <= t; ++j) {
            double binom = 1;
            for (size_t i = 0; i < j; ++i) binom = binom * (t - i) / (i + 1);
            const double marginal = 0.5 * (tm.prob[0][j] + tm.prob[1][j]);
            CHECK(marginal == doctest::Approx(binom * std::pow(2.0, -double(t))));
        }
    }
}

TEST_CASE("mutual information of the averaging channel") {
    CHECK(mutual_info_avg(3) == doctest::Approx(0.3113).epsilon(1e-3));
    CHECK(mutual_info_avg(2) == doctest::Approx(0.5).epsilon(1e-9));
    for (size_t t = 2; t <= 8; ++t) {
        CHECK(mutual_info_avg(t) <= 1.0);
        CHECK(mutual_info_avg(t) > 0.0);
    }
    CHECK(mutual_info_avg(2) == doctest::Approx(md_achievable_rate_avg(2)));
}

TEST_CASE("achievable rate formula") {
    CHECK(md_achievable_rate_avg(2) == doctest::Approx(0.5));
    CHECK(md_achievable_rate_avg(3) == doctest::Approx(0.25));
    CHECK(md_achievable_rate_avg(4) == doctest::Approx(0.125));
    CHECK_THROWS_AS((void)md_achievable_rate_avg(1), std::invalid_argument);
}

TEST_CASE("distance spectrum bookkeeping") {
    const Codebook pair = Codebook::iid(16, 2, 61);
    const SpectrumEstimate sp = empirical_distance_spectrum(pair);
    CHECK(sp.pair_counts.size() == 1);
    CHECK(sp.pair_counts.begin()->first == pair.codeword(0).hamming(pair.codeword(1)));
    CHECK(sp.total_pairs() == 1);

    const Codebook iid = Codebook::iid(12, 32, 67);
    const SpectrumEstimate sp2 = empirical_distance_spectrum(iid);
    CHECK(sp2.total_pairs() == 32 * 31 / 2);

    const Codebook lin = Codebook::linear(12, 5, 71);
    const SpectrumEstimate sp3 = empirical_distance_spectrum(lin);
    mpz_class m(static_cast<unsigned long>(lin.num_users()));
    CHECK(sp3.total_pairs() == m * (m - 1) / 2);
    // Cross-check the weight-enumeration path against brute force.
    SpectrumEstimate brute;
    for (uint64_t i = 0; i < lin.num_users(); ++i)
        for (uint64_t j = 0; j < i; ++j)
            brute.pair_counts[lin.codeword(i).hamming(lin.codeword(j))] += 1;
    CHECK(sp3.pair_counts == brute.pair_counts);
}

TEST_CASE("repetition code weight enumeration") {
    // Any two-word linear codebook {0, c} has one pair at distance wt(c).
    for (uint64_t seed = 0; seed < 6; ++seed) {
        const Codebook lin = Codebook::linear(4, 3, seed);
        if (lin.num_users() != 2) continue;
        const SpectrumEstimate sp = empirical_distance_spectrum(lin);
        CHECK(sp.total_pairs() == 1);
        CHECK(sp.pair_counts.begin()->first == lin.codeword(1).popcount());
    }
}

TEST_CASE("close pair bound formula") {
    const size_t n = 100;
    const double r = 0.3, eps = 0.05;
    const double direct =
        n * std::exp2(n * (2 * r - 1 + binary_entropy(0.5 + eps))) / std::exp2(2.0 * n * r);
    CHECK(close_pair_prob_bound(n, r, eps) == doctest::Approx(std::min(1.0, direct)));
    // Exponentially vanishing in n.
    CHECK(close_pair_prob_bound(4000, 0.3, 0.05) < close_pair_prob_bound(2000, 0.3, 0.05));
    CHECK_THROWS_AS((void)close_pair_prob_bound(10, 0.3, 0.0), std::invalid_argument);
}

TEST_CASE("rank deficiency probability") {
    CHECK(rank_deficiency_probability(3, 2) == doctest::Approx(1.0 / 22));
    CHECK(rank_deficiency_probability(5, 1) == 0.0);
    // Decreasing in l for fixed e.
    double prev = 1.0;
    for (unsigned l = 12; l <= 20; ++l) {
        const double p = rank_deficiency_probability(l, 12);
        CHECK(p <= prev + 1e-15);
        prev = p;
    }
}
