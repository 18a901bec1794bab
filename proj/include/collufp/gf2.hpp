#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "collufp/rng.hpp"

namespace collufp {

// Bit-packed vector over GF(2). Bits beyond size() are kept zero.
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(size_t len) : len_(len), w_(words_for(len), 0) {}

    static BitWord random(size_t len, Rng& rng);
    static BitWord from_string(const std::string& bits);  // e.g. "0101"

    size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    bool get(size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) noexcept {
        const uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(size_t i) noexcept { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitWord& operator^=(const BitWord& o);
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
    BitWord& operator&=(const BitWord& o);
    friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }

    bool operator==(const BitWord& o) const noexcept { return len_ == o.len_ && w_ == o.w_; }
    bool operator!=(const BitWord& o) const noexcept { return !(*this == o); }
    bool operator<(const BitWord& o) const noexcept;  // for use in ordered containers

    bool none() const noexcept;
    size_t popcount() const noexcept;
    size_t hamming(const BitWord& o) const;
    bool parity() const noexcept;  // xor of all bits
    bool dot(const BitWord& o) const;  // parity of bitwise AND

    const std::vector<uint64_t>& words() const noexcept { return w_; }
    std::vector<uint64_t>& words() noexcept { return w_; }

    // Zeroes any bits at positions >= size(); call after raw word writes.
    void trim() noexcept;

    std::string to_string() const;

    static size_t words_for(size_t bits) noexcept { return (bits + 63) / 64; }

private:
    size_t len_ = 0;
    std::vector<uint64_t> w_;
};

// Row-major bit-packed matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), wpr_(BitWord::words_for(cols)), w_(rows * wpr_, 0) {}

    static BitMatrix identity(size_t n);
    static BitMatrix random(size_t rows, size_t cols, Rng& rng);
    static BitMatrix from_rows(const std::vector<BitWord>& rows);

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    bool get(size_t r, size_t c) const noexcept {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool v) noexcept {
        const uint64_t mask = uint64_t{1} << (c & 63);
        if (v)
            w_[r * wpr_ + (c >> 6)] |= mask;
        else
            w_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    BitWord row(size_t r) const;
    void set_row(size_t r, const BitWord& w);
    void xor_rows(size_t dst, size_t src) noexcept;  // row[dst] ^= row[src]
    void swap_rows(size_t a, size_t b) noexcept;

    // Submatrix formed by the given columns; indices must be strictly increasing.
    BitMatrix select_columns(const std::vector<uint32_t>& idx) const;

    BitWord mul(const BitWord& v) const;  // A·v, v.size() == cols

    bool operator==(const BitMatrix& o) const noexcept {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

private:
    const uint64_t* row_ptr(size_t r) const noexcept { return w_.data() + r * wpr_; }
    uint64_t* row_ptr(size_t r) noexcept { return w_.data() + r * wpr_; }

    size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;

    friend size_t rank(const BitMatrix&);
    friend struct RrefResult;
};

// All solutions of A·x = s: a particular solution plus a null-space basis.
struct SolutionSet {
    bool consistent = false;
    BitWord particular;
    std::vector<BitWord> nullspace_basis;

    mpz_class solution_count() const {
        if (!consistent) return 0;
        mpz_class c = 1;
        c <<= nullspace_basis.size();
        return c;
    }
};

size_t rank(const BitMatrix& m);

SolutionSet solve_affine(const BitMatrix& a, const BitWord& s);

// Deterministic Gray-code walk over the null-space coefficients.
std::vector<BitWord> enumerate_solutions(const SolutionSet& ss, size_t limit);

// Null space of A with the free-column bookkeeping needed to index codewords:
// basis[j] is the unique kernel vector with bit 1 at free_cols[j] and 0 at the
// other free columns.
struct KernelResult {
    std::vector<BitWord> basis;
    std::vector<uint32_t> free_cols;
};
KernelResult kernel(const BitMatrix& a);

}  // namespace collufp
