#pragma once

#include <cstdint>
#include <vector>

#include "collufp/codebook.hpp"
#include "collufp/gf2.hpp"
#include "collufp/rng.hpp"

namespace collufp {

// Binary fingerprints map to the antipodal alphabet as bit 0 -> +1, 1 -> -1.

struct Coalition {
    std::vector<uint64_t> users;   // distinct
    std::vector<BitWord> words;    // transmitted fingerprints, binary

    size_t t() const noexcept { return users.size(); }
    size_t n() const noexcept { return words.empty() ? 0 : words[0].size(); }
    bool contains(uint64_t user) const;

    // Uniform coalition of t distinct users.
    static Coalition draw(const Codebook& cb, size_t t, Rng& rng);
};

struct ForgedCopy {
    enum class Mode { Averaged, Binary };
    Mode mode = Mode::Binary;

    // Averaged: per-position count of pirates whose antipodal bit is +1,
    // so y_i = (2*ones_count[i] - t) / t. Counts keep the alphabet exact.
    size_t t = 0;
    std::vector<uint8_t> ones_count;

    // Binary (marking-assumption attacks).
    BitWord word;

    size_t n() const noexcept { return mode == Mode::Averaged ? ones_count.size() : word.size(); }
    bool erased_at(size_t i) const;  // Averaged: |y_i| != 1
    bool known_bit(size_t i) const;  // Averaged, unerased: the common pirate bit
};

struct ErasurePattern {
    std::vector<uint32_t> erased;  // ascending
    BitWord erased_mask;           // bit set iff erased

    size_t n() const noexcept { return erased_mask.size(); }
};

ForgedCopy averaging_attack(const Coalition& coalition);

ErasurePattern erasures_from_average(const ForgedCopy& y);

std::vector<uint32_t> detectable_positions(const Coalition& coalition);

// Two-pirate attack of the marking-assumption study: detectable positions
// are replaced by independent fair coin flips.
ForgedCopy memoryless_marking_attack(const Coalition& coalition, Rng& rng);

ForgedCopy xor3_attack(const BitWord& x1, const BitWord& x2, const BitWord& x3);

// Marking assumption audit: y agrees with the coalition on every
// undetectable position.
bool validate_marking(const ForgedCopy& y, const Coalition& coalition);

}  // namespace collufp
