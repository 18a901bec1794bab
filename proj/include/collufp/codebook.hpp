#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "collufp/gf2.hpp"
#include "collufp/rng.hpp"
#include "collufp/tanner.hpp"

namespace collufp {

enum class CodeKind { IID, Linear, Coset, RA, Protograph };

const char* to_string(CodeKind k);

// One ensemble instance: a deterministic map from user indices to length-n
// fingerprints, regenerated bit-identically from (kind, parameters, seed).
//
// Users are addressed by 64-bit indices. When the information dimension fits
// in 63 bits the address space is exactly 0..M-1; for longer graph codes the
// info word is derived from the user handle by a PRF, so any 64-bit handle is
// a valid user and distinct handles collide only with negligible probability.
class Codebook {
public:
    static Codebook iid(size_t n, uint64_t num_users, uint64_t seed);
    static Codebook linear(size_t n, size_t l, uint64_t seed);
    static Codebook coset(size_t n, size_t l, uint64_t seed, uint64_t key_seed);
    static Codebook ra(size_t info_bits, size_t q, uint64_t seed);
    static Codebook protograph(const ProtographSpec& spec, size_t lift, uint64_t seed);

    CodeKind kind() const noexcept { return kind_; }
    size_t n() const noexcept { return n_; }
    uint64_t seed() const noexcept { return seed_; }
    double rate() const noexcept { return rate_; }

    // True when user indices are exactly 0..num_users()-1.
    bool exact_users() const noexcept { return exact_users_; }
    uint64_t num_users() const noexcept { return num_users_; }
    double log2_users() const noexcept { return log2_users_; }

    // Transmitted fingerprint of a user (binary alphabet).
    BitWord codeword(uint64_t user) const;

    // Assignment of every Tanner variable node (graph codes); equals
    // codeword() for the other ensembles.
    BitWord full_assignment(uint64_t user) const;

    // Inverse of codeword() for Linear/Coset; nullopt if w is not a codeword.
    std::optional<uint64_t> user_of_codeword(const BitWord& w) const;

    const TannerGraph& graph() const;          // RA/Protograph only
    const BitMatrix& parity() const;           // Linear/Coset: H with H*c = 0 (after key removal)
    const BitWord& key() const;                // Coset only
    size_t info_dim() const noexcept { return dim_; }

private:
    Codebook() = default;
    BitWord info_word(uint64_t user) const;
    BitWord combine_basis(const BitWord& info) const;

    CodeKind kind_ = CodeKind::IID;
    size_t n_ = 0;
    uint64_t seed_ = 0;
    double rate_ = 0;
    bool exact_users_ = false;
    uint64_t num_users_ = 0;
    double log2_users_ = 0;
    size_t dim_ = 0;

    // Linear / Coset
    BitMatrix parity_;                     // H, rows x n (over transmitted bits)
    std::vector<BitWord> gen_rows_;        // dim x n basis (codeword = sum of rows + key)
    std::vector<uint32_t> pivot_cols_;     // per basis row: column where only it has a 1
    std::vector<BitWord> decode_rows_;     // row j: user bits implied by coefficient j
    std::vector<BitWord> rref_rows_;       // reduced form of gen_rows_ (coset decode)
    BitWord key_;

    // RA / Protograph
    std::shared_ptr<const TannerGraph> graph_;
    std::vector<uint32_t> interleaver_;    // RA
    size_t q_ = 0;                         // RA
    std::vector<BitWord> var_basis_;       // Protograph: kernel basis over all vars
};

}  // namespace collufp
