#include "collufp/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace collufp {

BitWord BitWord::random(size_t len, Rng& rng) {
    BitWord w(len);
    for (auto& word : w.w_) word = rng.next();
    w.trim();
    return w;
}

BitWord BitWord::from_string(const std::string& bits) {
    BitWord w(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            w.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitWord::from_string: expected '0'/'1'");
    }
    return w;
}

BitWord& BitWord::operator^=(const BitWord& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitWord xor: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitWord& BitWord::operator&=(const BitWord& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitWord and: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

bool BitWord::operator<(const BitWord& o) const noexcept {
    if (len_ != o.len_) return len_ < o.len_;
    for (size_t i = w_.size(); i-- > 0;) {
        if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    }
    return false;
}

bool BitWord::none() const noexcept {
    for (uint64_t word : w_)
        if (word) return false;
    return true;
}

size_t BitWord::popcount() const noexcept {
    size_t c = 0;
    for (uint64_t word : w_) c += static_cast<size_t>(std::popcount(word));
    return c;
}

size_t BitWord::hamming(const BitWord& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitWord::hamming: length mismatch");
    size_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += static_cast<size_t>(std::popcount(w_[i] ^ o.w_[i]));
    return c;
}

bool BitWord::parity() const noexcept {
    uint64_t acc = 0;
    for (uint64_t word : w_) acc ^= word;
    return std::popcount(acc) & 1;
}

bool BitWord::dot(const BitWord& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitWord::dot: length mismatch");
    uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

void BitWord::trim() noexcept {
    if (len_ & 63) w_.back() &= (uint64_t{1} << (len_ & 63)) - 1;
}

std::string BitWord::to_string() const {
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::random(size_t rows, size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        uint64_t* p = m.row_ptr(r);
        for (size_t j = 0; j < m.wpr_; ++j) p[j] = rng.next();
        if (cols & 63) p[m.wpr_ - 1] &= (uint64_t{1} << (cols & 63)) - 1;
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitWord>& rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitWord BitMatrix::row(size_t r) const {
    BitWord w(cols_);
    std::copy(row_ptr(r), row_ptr(r) + wpr_, w.words().begin());
    return w;
}

void BitMatrix::set_row(size_t r, const BitWord& w) {
    if (w.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: width mismatch");
    std::copy(w.words().begin(), w.words().end(), row_ptr(r));
}

void BitMatrix::xor_rows(size_t dst, size_t src) noexcept {
    uint64_t* d = row_ptr(dst);
    const uint64_t* s = row_ptr(src);
    for (size_t j = 0; j < wpr_; ++j) d[j] ^= s[j];
}

void BitMatrix::swap_rows(size_t a, size_t b) noexcept {
    if (a == b) return;
    uint64_t* pa = row_ptr(a);
    uint64_t* pb = row_ptr(b);
    for (size_t j = 0; j < wpr_; ++j) std::swap(pa[j], pb[j]);
}

BitMatrix BitMatrix::select_columns(const std::vector<uint32_t>& idx) const {
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] >= idx[i + 1])
            throw std::invalid_argument("select_columns: indices must be strictly increasing");
    if (!idx.empty() && idx.back() >= cols_)
        throw std::invalid_argument("select_columns: index out of range");
    BitMatrix m(rows_, idx.size());
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < idx.size(); ++c)
            if (get(r, idx[c])) m.set(r, c, true);
    return m;
}

BitWord BitMatrix::mul(const BitWord& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::mul: dimension mismatch");
    BitWord out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const uint64_t* p = row_ptr(r);
        for (size_t j = 0; j < wpr_; ++j) acc ^= p[j] & v.words()[j];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

namespace {

// Row echelon with full back-substitution on a working copy. Pivot search
// takes the lowest-index candidate row.
struct Rref {
    BitMatrix m;
    std::vector<uint32_t> pivot_cols;            // per pivot row, ascending
    std::vector<int32_t> pivot_row_of_col;       // -1 if column is free

    explicit Rref(BitMatrix work) : m(std::move(work)) {
        pivot_row_of_col.assign(m.cols(), -1);
        size_t pr = 0;
        for (size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
            size_t sel = pr;
            while (sel < m.rows() && !m.get(sel, c)) ++sel;
            if (sel == m.rows()) continue;
            m.swap_rows(pr, sel);
            for (size_t r = 0; r < m.rows(); ++r)
                if (r != pr && m.get(r, c)) m.xor_rows(r, pr);
            pivot_cols.push_back(static_cast<uint32_t>(c));
            pivot_row_of_col[c] = static_cast<int32_t>(pr);
            ++pr;
        }
    }
};

}  // namespace

size_t rank(const BitMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    BitMatrix work = m;
    size_t r = 0;
    for (size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        size_t sel = r;
        while (sel < work.rows() && !work.get(sel, c)) ++sel;
        if (sel == work.rows()) continue;
        work.swap_rows(r, sel);
        for (size_t rr = r + 1; rr < work.rows(); ++rr)
            if (work.get(rr, c)) work.xor_rows(rr, r);
        ++r;
    }
    return r;
}

SolutionSet solve_affine(const BitMatrix& a, const BitWord& s) {
    if (s.size() != a.rows()) throw std::invalid_argument("solve_affine: s.length != a.rows");

    // Augment with s as an extra column and reduce.
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) aug.set(r, c, true);
        if (s.get(r)) aug.set(r, a.cols(), true);
    }
    Rref rr(std::move(aug));

    SolutionSet out;
    // Pivot in the augmented column means 0 = 1: inconsistent.
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == a.cols()) return out;
    out.consistent = true;

    out.particular = BitWord(a.cols());
    for (size_t p = 0; p < rr.pivot_cols.size(); ++p) {
        const size_t prow = static_cast<size_t>(rr.pivot_row_of_col[rr.pivot_cols[p]]);
        if (rr.m.get(prow, a.cols())) out.particular.set(rr.pivot_cols[p], true);
    }

    for (size_t c = 0; c < a.cols(); ++c) {
        if (rr.pivot_row_of_col[c] != -1) continue;
        BitWord v(a.cols());
        v.set(c, true);
        for (uint32_t pc : rr.pivot_cols) {
            const size_t prow = static_cast<size_t>(rr.pivot_row_of_col[pc]);
            if (rr.m.get(prow, c)) v.set(pc, true);
        }
        out.nullspace_basis.push_back(std::move(v));
    }
    return out;
}

std::vector<BitWord> enumerate_solutions(const SolutionSet& ss, size_t limit) {
    std::vector<BitWord> out;
    if (!ss.consistent || limit == 0) return out;

    const size_t dim = ss.nullspace_basis.size();
    size_t total = limit;
    if (dim < 63) total = std::min<size_t>(limit, size_t{1} << dim);

    BitWord cur = ss.particular;
    out.push_back(cur);
    // Gray-code walk: step i flips basis vector ctz(i).
    for (size_t i = 1; i < total; ++i) {
        const size_t b = static_cast<size_t>(std::countr_zero(i));
        cur ^= ss.nullspace_basis[b];
        out.push_back(cur);
    }
    return out;
}

KernelResult kernel(const BitMatrix& a) {
    Rref rr{BitMatrix(a)};
    KernelResult out;
    for (size_t c = 0; c < a.cols(); ++c)
        if (rr.pivot_row_of_col[c] == -1) out.free_cols.push_back(static_cast<uint32_t>(c));
    for (uint32_t fc : out.free_cols) {
        BitWord v(a.cols());
        v.set(fc, true);
        for (uint32_t pc : rr.pivot_cols) {
            const size_t prow = static_cast<size_t>(rr.pivot_row_of_col[pc]);
            if (rr.m.get(prow, fc)) v.set(pc, true);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace collufp
