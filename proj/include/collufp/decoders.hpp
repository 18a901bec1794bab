#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "collufp/analysis.hpp"
#include "collufp/attacks.hpp"
#include "collufp/codebook.hpp"

namespace collufp {

enum class DecodeStatus { Identified, Ambiguous, Failed };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Failed;
    bool has_accused = false;
    uint64_t accused = 0;
    uint64_t candidate_count = 0;
    size_t iterations = 0;
    size_t guesses = 0;

    // Graph decoders and the syndrome decoder report the decoded fingerprint;
    // the harness maps it to a user when direct indexing is unavailable.
    bool has_word = false;
    BitWord word;
};

// Erasure-consistency matching over the whole codebook: candidates agree
// with y on every unerased position. <= t candidates: accuse the lowest
// index; more: ambiguous, accuse a uniform pick.
DecodeOutcome md_erasure_decode(const Codebook& cb, const ForgedCopy& y, Rng& pick_rng);

// Theorem-2 style decoder for t=2: solve H_E x_E = H_Ebar y_Ebar.
DecodeOutcome syndrome_erasure_decode(const Codebook& cb, const ForgedCopy& y, Rng& pick_rng);

// Codewords consistent with y on unerased positions, as words (test support).
std::vector<BitWord> erasure_consistent_words(const Codebook& cb, const ForgedCopy& y);

DecodeOutcome md_hamming_decode(const Codebook& cb, const ForgedCopy& y);

DecodeOutcome likelihood_decode_avg(const Codebook& cb, const ForgedCopy& y,
                                    const TransitionMatrix& tm);

// Peeling state over the variable nodes of a Tanner graph.
struct BpState {
    std::vector<int8_t> value;      // -1 erased, else 0/1
    size_t unresolved = 0;
    bool contradiction = false;

    static BpState from_average(const TannerGraph& g, const ForgedCopy& y);
    std::vector<uint32_t> erased_nodes() const;
};

// Resolves every check with exactly one erased neighbor until none remain.
// Returns false when a fully-known check is violated.
bool bp_peel(const TannerGraph& g, BpState& state);

bool is_stopping_set(const TannerGraph& g, const std::vector<uint32_t>& subset);

// Node choice for the guessing step: an erased accumulator-chain node whose
// chain neighbors are both known; fallback: an erased chain node on a check
// with exactly two erased neighbors. Nodes in `already_guessed` are skipped.
std::optional<uint32_t> select_guess_node(const TannerGraph& g, const BpState& state,
                                          const std::vector<uint32_t>& already_guessed);

// Peeling plus up to n_max guesses (each guessed node is set to 1 and peeling
// restarts from the pre-guess state on failure). `node_selection` false picks
// the first erased chain node instead of the targeted rule.
DecodeOutcome modified_bp_decode(const TannerGraph& g, const ForgedCopy& y, size_t n_max,
                                 bool node_selection = true);

// Sum-product decoding with a BSC channel prior (LLR clamped to +/-30);
// stops when the hard decision satisfies every check.
DecodeOutcome bp_bsc_decode(const TannerGraph& g, const BitWord& y, double crossover,
                            size_t max_iters);

}  // namespace collufp
