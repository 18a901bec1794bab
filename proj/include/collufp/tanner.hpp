#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "collufp/gf2.hpp"
#include "collufp/rng.hpp"

namespace collufp {

// Bipartite graph of variable and check nodes. Transmitted (fingerprint)
// positions are the non-punctured variables, in tx order. For RA codes the
// accumulator output nodes form the degree-2 chain used by the guessing
// decoder; `chain` lists them in accumulator order.
struct TannerGraph {
    size_t num_vars = 0;
    size_t num_checks = 0;
    std::vector<std::vector<uint32_t>> check_vars;   // per check, adjacent variables
    std::vector<std::vector<uint32_t>> var_checks;   // per variable, adjacent checks
    std::vector<int32_t> var_tx;                     // var -> transmitted index, -1 if punctured
    std::vector<uint32_t> tx_var;                    // transmitted index -> var
    std::vector<uint32_t> chain;                     // accumulator chain vars, in order
    std::vector<int32_t> chain_pos;                  // var -> position in chain, -1 otherwise

    size_t tx_len() const noexcept { return tx_var.size(); }

    // Builds var_checks, tx maps and chain_pos from check_vars / var_tx / chain.
    void finalize();

    // Parity audit of a full variable assignment.
    bool satisfies_checks(const BitWord& assignment) const;
};

// Builds the Tanner graph of a regular repeat-accumulate code:
// info bits repeated q times, interleaved, then accumulated. Variables are
// the info nodes (0..k-1, punctured) followed by the accumulator outputs.
// Check i enforces u_{pi(i)} + v_{i-1} + v_i = 0.
TannerGraph build_ra_graph(size_t info_bits, size_t q, const std::vector<uint32_t>& interleaver);

// Encodes one info word; the returned graph matches build_ra_graph.
std::pair<BitWord, TannerGraph> encode_ra(const BitWord& info, size_t q,
                                          const std::vector<uint32_t>& interleaver);

// Accumulator outputs only (no graph rebuild).
BitWord ra_codeword(const BitWord& info, size_t q, const std::vector<uint32_t>& interleaver);

// Protograph: a small base Tanner graph given as a matrix of edge
// multiplicities (check rows x variable columns), lifted by copy-and-permute.
struct ProtographSpec {
    size_t rows = 0;
    size_t cols = 0;
    size_t default_lift = 1;
    std::vector<std::vector<uint32_t>> mult;  // rows x cols
    std::vector<bool> punctured;              // per variable column

    size_t tx_cols() const noexcept;
    double design_rate() const;  // (cols - rows) / tx_cols

    // File format: "rows cols lift_default", the base matrix row by row,
    // then an optional "puncture: i j k" line (0-based variable columns).
    static ProtographSpec parse(std::istream& in);
    static ProtographSpec load(const std::string& path);
};

// Copy-and-permute lifting with disjoint permutations per base edge.
TannerGraph lift_protograph(const ProtographSpec& spec, size_t lift, Rng& rng);

// Parity-check matrix of a lifted (or any) Tanner graph over all variables.
BitMatrix parity_matrix(const TannerGraph& g);

}  // namespace collufp
