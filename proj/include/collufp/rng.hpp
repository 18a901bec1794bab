#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace collufp {

// splitmix64 step (Vigna). Used for seed derivation and as the PRF behind
// lazy codeword generation, so results are identical across platforms.
inline uint64_t splitmix64(uint64_t& state) noexcept {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless mix of a seed tuple into one 64-bit stream seed.
inline uint64_t mix_seed(uint64_t a, uint64_t b) noexcept {
    uint64_t s = a;
    (void)splitmix64(s);
    s ^= b + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    return splitmix64(s);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) noexcept {
    return mix_seed(mix_seed(a, b), c);
}

// xoshiro256** with splitmix-expanded seed. Self-contained so that seeded
// runs are bit-identical everywhere (std:: distributions are not portable).
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
        bit_pool_ = 0;
        bits_left_ = 0;
    }

    uint64_t next() noexcept {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    bool bit() noexcept {
        if (bits_left_ == 0) {
            bit_pool_ = next();
            bits_left_ = 64;
        }
        const bool b = bit_pool_ & 1;
        bit_pool_ >>= 1;
        --bits_left_;
        return b;
    }

    // Unbiased integer in [0, bound) via rejection.
    uint64_t below(uint64_t bound) noexcept {
        const uint64_t threshold = -bound % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() noexcept { return (next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) noexcept {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
    uint64_t bit_pool_;
    int bits_left_;
};

}  // namespace collufp
