#include "collufp/codebook.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace collufp {

namespace {

// Stream tags so codebook structure, keys and per-user payloads draw from
// isolated substreams of one seed.
enum : uint64_t { TagIid = 0x11, TagH = 0x12, TagG = 0x13, TagKey = 0x14, TagIlv = 0x15, TagLift = 0x16, TagInfo = 0x17 };

}  // namespace

const char* to_string(CodeKind k) {
    switch (k) {
        case CodeKind::IID: return "iid";
        case CodeKind::Linear: return "linear";
        case CodeKind::Coset: return "coset";
        case CodeKind::RA: return "ra";
        case CodeKind::Protograph: return "protograph";
    }
    return "?";
}

Codebook Codebook::iid(size_t n, uint64_t num_users, uint64_t seed) {
    if (num_users < 2) throw std::invalid_argument("iid codebook: need at least 2 users");
    Codebook cb;
    cb.kind_ = CodeKind::IID;
    cb.n_ = n;
    cb.seed_ = seed;
    cb.exact_users_ = true;
    cb.num_users_ = num_users;
    cb.log2_users_ = std::log2(static_cast<double>(num_users));
    cb.rate_ = cb.log2_users_ / static_cast<double>(n);
    return cb;
}

Codebook Codebook::linear(size_t n, size_t l, uint64_t seed) {
    if (l == 0 || l >= n) throw std::invalid_argument("linear codebook: need 0 < l < n");
    Codebook cb;
    cb.kind_ = CodeKind::Linear;
    cb.n_ = n;
    cb.seed_ = seed;
    Rng rng(mix_seed(seed, TagH));
    cb.parity_ = BitMatrix::random(l, n, rng);
    KernelResult kern = kernel(cb.parity_);
    cb.gen_rows_ = std::move(kern.basis);
    cb.pivot_cols_ = std::move(kern.free_cols);
    cb.dim_ = cb.gen_rows_.size();
    cb.key_ = BitWord(n);
    if (cb.dim_ > 62) throw std::invalid_argument("linear codebook: dimension too large to index");
    cb.exact_users_ = true;
    cb.num_users_ = uint64_t{1} << cb.dim_;
    cb.log2_users_ = static_cast<double>(cb.dim_);
    cb.rate_ = cb.log2_users_ / static_cast<double>(n);
    // Identity decode map: basis row j is the only row with a 1 at its pivot.
    cb.decode_rows_.resize(cb.dim_, BitWord(cb.dim_));
    for (size_t j = 0; j < cb.dim_; ++j) cb.decode_rows_[j].set(j, true);
    return cb;
}

Codebook Codebook::coset(size_t n, size_t l, uint64_t seed, uint64_t key_seed) {
    if (l == 0 || l >= n) throw std::invalid_argument("coset codebook: need 0 < l < n");
    const size_t dim = n - l;
    if (dim > 62) throw std::invalid_argument("coset codebook: dimension too large to index");
    Codebook cb;
    cb.kind_ = CodeKind::Coset;
    cb.n_ = n;
    cb.seed_ = seed;
    cb.dim_ = dim;
    Rng grng(mix_seed(seed, TagG));
    BitMatrix g = BitMatrix::random(dim, n, grng);
    cb.gen_rows_.reserve(dim);
    for (size_t r = 0; r < dim; ++r) cb.gen_rows_.push_back(g.row(r));
    Rng krng(mix_seed(key_seed, TagKey));
    cb.key_ = BitWord::random(n, krng);

    // Parity checks of the underlying linear code: kernel of G as a map on x.
    KernelResult hk = kernel(g);
    std::vector<BitWord> hrows = std::move(hk.basis);
    cb.parity_ = BitMatrix::from_rows(hrows);
    if (hrows.empty()) cb.parity_ = BitMatrix(0, n);

    // RREF of G with the row-combination transform, for codeword -> user.
    std::vector<BitWord> rref = cb.gen_rows_;
    std::vector<BitWord> tf(dim, BitWord(dim));
    for (size_t j = 0; j < dim; ++j) tf[j].set(j, true);
    size_t pr = 0;
    for (size_t c = 0; c < n && pr < dim; ++c) {
        size_t sel = pr;
        while (sel < dim && !rref[sel].get(c)) ++sel;
        if (sel == dim) continue;
        std::swap(rref[pr], rref[sel]);
        std::swap(tf[pr], tf[sel]);
        for (size_t r = 0; r < dim; ++r)
            if (r != pr && rref[r].get(c)) {
                rref[r] ^= rref[pr];
                tf[r] ^= tf[pr];
            }
        cb.pivot_cols_.push_back(static_cast<uint32_t>(c));
        ++pr;
    }
    rref.resize(pr);
    tf.resize(pr);
    cb.decode_rows_ = std::move(tf);
    cb.rref_rows_ = std::move(rref);

    cb.exact_users_ = true;
    cb.num_users_ = uint64_t{1} << dim;
    cb.log2_users_ = static_cast<double>(dim);
    cb.rate_ = cb.log2_users_ / static_cast<double>(n);
    return cb;
}

Codebook Codebook::ra(size_t info_bits, size_t q, uint64_t seed) {
    if (info_bits == 0 || q < 2) throw std::invalid_argument("ra codebook: need info_bits >= 1, q >= 2");
    Codebook cb;
    cb.kind_ = CodeKind::RA;
    cb.n_ = info_bits * q;
    cb.seed_ = seed;
    cb.q_ = q;
    cb.dim_ = info_bits;
    cb.interleaver_.resize(cb.n_);
    std::iota(cb.interleaver_.begin(), cb.interleaver_.end(), 0u);
    Rng rng(mix_seed(seed, TagIlv));
    rng.shuffle(cb.interleaver_);
    cb.graph_ = std::make_shared<TannerGraph>(build_ra_graph(info_bits, q, cb.interleaver_));
    cb.exact_users_ = info_bits <= 62;
    cb.num_users_ = cb.exact_users_ ? (uint64_t{1} << info_bits) : 0;
    cb.log2_users_ = static_cast<double>(info_bits);
    cb.rate_ = 1.0 / static_cast<double>(q);
    return cb;
}

Codebook Codebook::protograph(const ProtographSpec& spec, size_t lift, uint64_t seed) {
    Codebook cb;
    cb.kind_ = CodeKind::Protograph;
    cb.seed_ = seed;
    Rng rng(mix_seed(seed, TagLift));
    cb.graph_ = std::make_shared<TannerGraph>(lift_protograph(spec, lift, rng));
    cb.n_ = cb.graph_->tx_len();
    KernelResult kern = kernel(parity_matrix(*cb.graph_));
    cb.var_basis_ = std::move(kern.basis);
    cb.dim_ = cb.var_basis_.size();
    cb.exact_users_ = cb.dim_ <= 62;
    cb.num_users_ = cb.exact_users_ ? (uint64_t{1} << cb.dim_) : 0;
    cb.log2_users_ = static_cast<double>(cb.dim_);
    cb.rate_ = cb.log2_users_ / static_cast<double>(cb.n_);
    return cb;
}

BitWord Codebook::info_word(uint64_t user) const {
    BitWord info(dim_);
    if (exact_users_) {
        for (size_t j = 0; j < dim_; ++j)
            if ((user >> j) & 1) info.set(j, true);
    } else {
        const uint64_t base = mix_seed(seed_, TagInfo, user);
        for (size_t j = 0; j < info.words().size(); ++j)
            info.words()[j] = mix_seed(base, j);
        info.trim();
    }
    return info;
}

BitWord Codebook::combine_basis(const BitWord& info) const {
    const std::vector<BitWord>& basis = kind_ == CodeKind::Protograph ? var_basis_ : gen_rows_;
    BitWord out(basis.empty() ? 0 : basis[0].size());
    for (size_t j = 0; j < basis.size(); ++j)
        if (info.get(j)) out ^= basis[j];
    return out;
}

BitWord Codebook::full_assignment(uint64_t user) const {
    switch (kind_) {
        case CodeKind::IID: {
            if (user >= num_users_) throw std::invalid_argument("codeword: user out of range");
            BitWord w(n_);
            for (size_t j = 0; j < w.words().size(); ++j)
                w.words()[j] = mix_seed(mix_seed(seed_, TagIid, user), j);
            w.trim();
            return w;
        }
        case CodeKind::Linear:
        case CodeKind::Coset: {
            if (user >= num_users_) throw std::invalid_argument("codeword: user out of range");
            BitWord w = combine_basis(info_word(user));
            w ^= key_;
            return w;
        }
        case CodeKind::RA: {
            const BitWord info = info_word(user);
            const BitWord acc = ra_codeword(info, q_, interleaver_);
            BitWord all(graph_->num_vars);
            for (size_t j = 0; j < dim_; ++j)
                if (info.get(j)) all.set(j, true);
            for (size_t i = 0; i < acc.size(); ++i)
                if (acc.get(i)) all.set(dim_ + i, true);
            return all;
        }
        case CodeKind::Protograph:
            return combine_basis(info_word(user));
    }
    throw std::logic_error("unreachable");
}

BitWord Codebook::codeword(uint64_t user) const {
    if (kind_ == CodeKind::RA || kind_ == CodeKind::Protograph) {
        const BitWord all = full_assignment(user);
        BitWord tx(graph_->tx_len());
        for (size_t i = 0; i < tx.size(); ++i)
            if (all.get(graph_->tx_var[i])) tx.set(i, true);
        return tx;
    }
    return full_assignment(user);
}

std::optional<uint64_t> Codebook::user_of_codeword(const BitWord& w) const {
    if (kind_ != CodeKind::Linear && kind_ != CodeKind::Coset)
        throw std::invalid_argument("user_of_codeword: linear/coset only");
    if (w.size() != n_) throw std::invalid_argument("user_of_codeword: length mismatch");
    BitWord shifted = w;
    shifted ^= key_;
    BitWord u(dim_);
    if (kind_ == CodeKind::Linear) {
        for (size_t j = 0; j < pivot_cols_.size(); ++j)
            if (shifted.get(pivot_cols_[j])) u.set(j, true);
    } else {
        for (size_t j = 0; j < pivot_cols_.size(); ++j)
            if (shifted.get(pivot_cols_[j])) u ^= decode_rows_[j];
    }
    uint64_t idx = 0;
    for (size_t j = 0; j < dim_; ++j)
        if (u.get(j)) idx |= uint64_t{1} << j;
    if (codeword(idx) != w) return std::nullopt;
    return idx;
}

const TannerGraph& Codebook::graph() const {
    if (!graph_) throw std::invalid_argument("graph(): not a graph-based codebook");
    return *graph_;
}

const BitMatrix& Codebook::parity() const {
    if (kind_ != CodeKind::Linear && kind_ != CodeKind::Coset)
        throw std::invalid_argument("parity(): linear/coset only");
    return parity_;
}

const BitWord& Codebook::key() const {
    if (kind_ != CodeKind::Coset) throw std::invalid_argument("key(): coset only");
    return key_;
}

}  // namespace collufp
