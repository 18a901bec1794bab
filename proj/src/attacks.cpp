#include "collufp/attacks.hpp"

#include <algorithm>
#include <stdexcept>

namespace collufp {

bool Coalition::contains(uint64_t user) const {
    return std::find(users.begin(), users.end(), user) != users.end();
}

Coalition Coalition::draw(const Codebook& cb, size_t t, Rng& rng) {
    if (t < 2) throw std::invalid_argument("Coalition::draw: need t >= 2");
    if (cb.exact_users() && cb.num_users() < t)
        throw std::invalid_argument("Coalition::draw: fewer users than t");
    Coalition c;
    while (c.users.size() < t) {
        const uint64_t u = cb.exact_users() ? rng.below(cb.num_users()) : rng.next();
        if (!c.contains(u)) c.users.push_back(u);
    }
    c.words.reserve(t);
    for (uint64_t u : c.users) c.words.push_back(cb.codeword(u));
    return c;
}

bool ForgedCopy::erased_at(size_t i) const {
    if (mode != Mode::Averaged) throw std::invalid_argument("erased_at: averaged mode only");
    return ones_count[i] != 0 && ones_count[i] != t;
}

bool ForgedCopy::known_bit(size_t i) const {
    // All pirates at +1 (count t) means common bit 0.
    return ones_count[i] == 0;
}

ForgedCopy averaging_attack(const Coalition& coalition) {
    const size_t t = coalition.t();
    const size_t n = coalition.n();
    ForgedCopy y;
    y.mode = ForgedCopy::Mode::Averaged;
    y.t = t;
    y.ones_count.assign(n, 0);
    for (const BitWord& w : coalition.words)
        for (size_t i = 0; i < n; ++i)
            if (!w.get(i)) ++y.ones_count[i];
    return y;
}

ErasurePattern erasures_from_average(const ForgedCopy& y) {
    if (y.mode != ForgedCopy::Mode::Averaged)
        throw std::invalid_argument("erasures_from_average: averaged mode only");
    ErasurePattern e;
    e.erased_mask = BitWord(y.n());
    for (size_t i = 0; i < y.n(); ++i)
        if (y.erased_at(i)) {
            e.erased.push_back(static_cast<uint32_t>(i));
            e.erased_mask.set(i, true);
        }
    return e;
}

std::vector<uint32_t> detectable_positions(const Coalition& coalition) {
    const size_t n = coalition.n();
    std::vector<uint32_t> out;
    for (size_t i = 0; i < n; ++i) {
        const bool first = coalition.words[0].get(i);
        for (size_t j = 1; j < coalition.t(); ++j)
            if (coalition.words[j].get(i) != first) {
                out.push_back(static_cast<uint32_t>(i));
                break;
            }
    }
    return out;
}

ForgedCopy memoryless_marking_attack(const Coalition& coalition, Rng& rng) {
    if (coalition.t() != 2)
        throw std::invalid_argument("memoryless_marking_attack: defined for two pirates");
    const BitWord& x1 = coalition.words[0];
    const BitWord& x2 = coalition.words[1];
    ForgedCopy y;
    y.mode = ForgedCopy::Mode::Binary;
    y.word = x1;
    for (size_t i = 0; i < x1.size(); ++i)
        if (x1.get(i) != x2.get(i)) y.word.set(i, rng.bit());
    return y;
}

ForgedCopy xor3_attack(const BitWord& x1, const BitWord& x2, const BitWord& x3) {
    if (x1.size() != x2.size() || x1.size() != x3.size())
        throw std::invalid_argument("xor3_attack: length mismatch");
    ForgedCopy y;
    y.mode = ForgedCopy::Mode::Binary;
    y.word = x1;
    y.word ^= x2;
    y.word ^= x3;
    return y;
}

bool validate_marking(const ForgedCopy& y, const Coalition& coalition) {
    if (y.mode != ForgedCopy::Mode::Binary)
        throw std::invalid_argument("validate_marking: binary mode only");
    const std::vector<uint32_t> detectable = detectable_positions(coalition);
    size_t d = 0;
    for (size_t i = 0; i < y.word.size(); ++i) {
        if (d < detectable.size() && detectable[d] == i) {
            ++d;
            continue;
        }
        if (y.word.get(i) != coalition.words[0].get(i)) return false;
    }
    return true;
}

}  // namespace collufp
