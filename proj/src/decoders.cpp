#include "collufp/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace collufp {

namespace {

constexpr double kLlrClamp = 30.0;

// y's known bits as a word, plus the unerased (keep) mask.
struct KnownBits {
    BitWord bits;
    BitWord keep;
};

KnownBits known_bits(const ForgedCopy& y) {
    if (y.mode != ForgedCopy::Mode::Averaged)
        throw std::invalid_argument("decoder: averaged-mode forgery required");
    KnownBits kb{BitWord(y.n()), BitWord(y.n())};
    for (size_t i = 0; i < y.n(); ++i)
        if (!y.erased_at(i)) {
            kb.keep.set(i, true);
            if (y.known_bit(i)) kb.bits.set(i, true);
        }
    return kb;
}

bool agrees_on_keep(const BitWord& w, const KnownBits& kb) {
    const auto& ww = w.words();
    const auto& bw = kb.bits.words();
    const auto& kw = kb.keep.words();
    for (size_t j = 0; j < ww.size(); ++j)
        if ((ww[j] ^ bw[j]) & kw[j]) return false;
    return true;
}

void require_materializable(const Codebook& cb) {
    if (!cb.exact_users())
        throw std::invalid_argument("decoder: codebook too large to materialize");
}

}  // namespace

DecodeOutcome md_erasure_decode(const Codebook& cb, const ForgedCopy& y, Rng& pick_rng) {
    require_materializable(cb);
    if (y.n() != cb.n()) throw std::invalid_argument("md_erasure_decode: length mismatch");
    const KnownBits kb = known_bits(y);

    std::vector<uint64_t> candidates;
    for (uint64_t u = 0; u < cb.num_users(); ++u)
        if (agrees_on_keep(cb.codeword(u), kb)) candidates.push_back(u);

    DecodeOutcome out;
    out.candidate_count = candidates.size();
    if (candidates.empty()) return out;  // corrupted input; cannot occur for in-code y
    out.has_accused = true;
    if (candidates.size() <= y.t) {
        out.status = DecodeStatus::Identified;
        out.accused = candidates.front();
    } else {
        out.status = DecodeStatus::Ambiguous;
        out.accused = candidates[pick_rng.below(candidates.size())];
    }
    return out;
}

std::vector<BitWord> erasure_consistent_words(const Codebook& cb, const ForgedCopy& y) {
    require_materializable(cb);
    const KnownBits kb = known_bits(y);
    std::vector<BitWord> out;
    for (uint64_t u = 0; u < cb.num_users(); ++u) {
        BitWord w = cb.codeword(u);
        if (agrees_on_keep(w, kb)) out.push_back(std::move(w));
    }
    return out;
}

DecodeOutcome syndrome_erasure_decode(const Codebook& cb, const ForgedCopy& y, Rng& pick_rng) {
    if (cb.kind() != CodeKind::Linear && cb.kind() != CodeKind::Coset)
        throw std::invalid_argument("syndrome_erasure_decode: linear/coset codebook required");
    if (y.t != 2) throw std::invalid_argument("syndrome_erasure_decode: defined for t=2");
    if (y.n() != cb.n()) throw std::invalid_argument("syndrome_erasure_decode: length mismatch");

    const KnownBits kb = known_bits(y);
    const ErasurePattern ep = erasures_from_average(y);

    // Work in the underlying linear code: x = fingerprint + key.
    BitWord x_known = kb.bits;
    if (cb.kind() == CodeKind::Coset) {
        BitWord masked_key = cb.key();
        masked_key &= kb.keep;
        x_known ^= masked_key;
    }

    const BitMatrix& h = cb.parity();
    const BitWord syndrome = h.mul(x_known);  // erased bits are zero in x_known
    const BitMatrix h_erased = h.select_columns(ep.erased);
    const SolutionSet ss = solve_affine(h_erased, syndrome);

    DecodeOutcome out;
    if (!ss.consistent) return out;  // y was not generated by this code

    const mpz_class count = ss.solution_count();
    out.candidate_count =
        count.fits_ulong_p() ? static_cast<uint64_t>(count.get_ui()) : std::numeric_limits<uint64_t>::max();

    const size_t limit = 4096;
    const std::vector<BitWord> erased_fills = enumerate_solutions(ss, limit);

    // Rebuild full fingerprints from each solution for the erased part.
    std::vector<BitWord> words;
    std::vector<uint64_t> users;
    words.reserve(erased_fills.size());
    for (const BitWord& fill : erased_fills) {
        BitWord x = x_known;
        for (size_t j = 0; j < ep.erased.size(); ++j)
            if (fill.get(j)) x.set(ep.erased[j], true);
        BitWord fingerprint = x;
        if (cb.kind() == CodeKind::Coset) fingerprint ^= cb.key();
        const auto u = cb.user_of_codeword(fingerprint);
        words.push_back(std::move(fingerprint));
        users.push_back(u.value_or(std::numeric_limits<uint64_t>::max()));
    }

    size_t pick;
    if (count <= 2) {
        out.status = DecodeStatus::Identified;
        pick = 0;
        for (size_t i = 1; i < users.size(); ++i)
            if (users[i] < users[pick]) pick = i;
    } else {
        out.status = DecodeStatus::Ambiguous;
        pick = static_cast<size_t>(pick_rng.below(words.size()));
    }
    out.has_accused = users[pick] != std::numeric_limits<uint64_t>::max();
    out.accused = users[pick];
    out.has_word = true;
    out.word = words[pick];
    return out;
}

DecodeOutcome md_hamming_decode(const Codebook& cb, const ForgedCopy& y) {
    require_materializable(cb);
    if (y.mode != ForgedCopy::Mode::Binary)
        throw std::invalid_argument("md_hamming_decode: binary-mode forgery required");
    if (y.word.size() != cb.n()) throw std::invalid_argument("md_hamming_decode: length mismatch");

    DecodeOutcome out;
    size_t best = cb.n() + 1;
    for (uint64_t u = 0; u < cb.num_users(); ++u) {
        const size_t d = cb.codeword(u).hamming(y.word);
        if (d < best) {  // ties keep the lowest index
            best = d;
            out.accused = u;
        }
    }
    out.status = DecodeStatus::Identified;
    out.has_accused = true;
    out.candidate_count = 1;
    return out;
}

DecodeOutcome likelihood_decode_avg(const Codebook& cb, const ForgedCopy& y,
                                    const TransitionMatrix& tm) {
    require_materializable(cb);
    if (y.mode != ForgedCopy::Mode::Averaged)
        throw std::invalid_argument("likelihood_decode_avg: averaged-mode forgery required");
    if (y.t != tm.t) throw std::invalid_argument("likelihood_decode_avg: coalition size mismatch");
    if (y.n() != cb.n()) throw std::invalid_argument("likelihood_decode_avg: length mismatch");

    // Log-likelihood table; zero-probability transitions disqualify.
    const double neg_inf = -std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> lp(2, std::vector<double>(tm.t + 1, neg_inf));
    for (int x = 0; x < 2; ++x)
        for (size_t j = 0; j <= tm.t; ++j)
            if (tm.prob[x][j] > 0) lp[x][j] = std::log2(tm.prob[x][j]);

    DecodeOutcome out;
    double best = neg_inf;
    bool found = false;
    for (uint64_t u = 0; u < cb.num_users(); ++u) {
        const BitWord w = cb.codeword(u);
        double score = 0;
        for (size_t i = 0; i < y.n() && score != neg_inf; ++i) {
            // Bit 0 maps to antipodal +1, which is row 1 of the table.
            const int row = w.get(i) ? 0 : 1;
            score += lp[row][y.ones_count[i]];
        }
        if (score != neg_inf && (!found || score > best)) {
            best = score;
            out.accused = u;
            found = true;
        }
    }
    if (!found) return out;  // every codeword disqualified
    out.status = DecodeStatus::Identified;
    out.has_accused = true;
    out.candidate_count = 1;
    return out;
}

BpState BpState::from_average(const TannerGraph& g, const ForgedCopy& y) {
    if (y.mode != ForgedCopy::Mode::Averaged)
        throw std::invalid_argument("BpState::from_average: averaged mode only");
    if (y.n() != g.tx_len()) throw std::invalid_argument("BpState::from_average: length mismatch");
    BpState st;
    st.value.assign(g.num_vars, -1);
    st.unresolved = g.num_vars;
    for (size_t i = 0; i < y.n(); ++i)
        if (!y.erased_at(i)) {
            st.value[g.tx_var[i]] = y.known_bit(i) ? 1 : 0;
            --st.unresolved;
        }
    return st;
}

std::vector<uint32_t> BpState::erased_nodes() const {
    std::vector<uint32_t> out;
    for (size_t v = 0; v < value.size(); ++v)
        if (value[v] < 0) out.push_back(static_cast<uint32_t>(v));
    return out;
}

bool bp_peel(const TannerGraph& g, BpState& state) {
    std::vector<uint32_t> unknown(g.num_checks, 0);
    std::vector<uint8_t> par(g.num_checks, 0);
    std::vector<uint32_t> stack;
    for (size_t c = 0; c < g.num_checks; ++c) {
        for (uint32_t v : g.check_vars[c]) {
            if (state.value[v] < 0)
                ++unknown[c];
            else
                par[c] ^= static_cast<uint8_t>(state.value[v]);
        }
        if (unknown[c] == 0 && par[c]) {
            state.contradiction = true;
            return false;
        }
        if (unknown[c] == 1) stack.push_back(static_cast<uint32_t>(c));
    }

    while (!stack.empty()) {
        const uint32_t c = stack.back();
        stack.pop_back();
        if (unknown[c] != 1) continue;
        uint32_t var = 0;
        for (uint32_t v : g.check_vars[c])
            if (state.value[v] < 0) {
                var = v;
                break;
            }
        state.value[var] = par[c];
        --state.unresolved;
        for (uint32_t c2 : g.var_checks[var]) {
            --unknown[c2];
            par[c2] ^= static_cast<uint8_t>(state.value[var]);
            if (unknown[c2] == 1) stack.push_back(c2);
            if (unknown[c2] == 0 && par[c2]) {
                state.contradiction = true;
                return false;
            }
        }
    }
    return true;
}

bool is_stopping_set(const TannerGraph& g, const std::vector<uint32_t>& subset) {
    std::vector<uint32_t> touched(g.num_checks, 0);
    for (uint32_t v : subset)
        for (uint32_t c : g.var_checks[v]) ++touched[c];
    for (uint32_t c = 0; c < g.num_checks; ++c)
        if (touched[c] == 1) return false;
    return true;
}

namespace {

bool known(const BpState& st, uint32_t v) { return st.value[v] >= 0; }

bool already(const std::vector<uint32_t>& guessed, uint32_t v) {
    return std::find(guessed.begin(), guessed.end(), v) != guessed.end();
}

size_t erased_neighbors(const TannerGraph& g, const BpState& st, uint32_t check) {
    size_t c = 0;
    for (uint32_t v : g.check_vars[check])
        if (!known(st, v)) ++c;
    return c;
}

}  // namespace

std::optional<uint32_t> select_guess_node(const TannerGraph& g, const BpState& state,
                                          const std::vector<uint32_t>& already_guessed) {
    // Preferred: erased chain node with both chain neighbors known.
    for (size_t i = 0; i + 2 <= g.chain.size(); ++i) {
        if (i == 0) continue;
        const uint32_t v = g.chain[i];
        if (known(state, v) || already(already_guessed, v)) continue;
        if (known(state, g.chain[i - 1]) && known(state, g.chain[i + 1])) return v;
    }
    // Fallback: erased chain node on a check with exactly two erased neighbors.
    for (uint32_t v : g.chain) {
        if (known(state, v) || already(already_guessed, v)) continue;
        for (uint32_t c : g.var_checks[v])
            if (erased_neighbors(g, state, c) == 2) return v;
    }
    return std::nullopt;
}

DecodeOutcome modified_bp_decode(const TannerGraph& g, const ForgedCopy& y, size_t n_max,
                                 bool node_selection) {
    DecodeOutcome out;
    BpState base = BpState::from_average(g, y);
    out.iterations = 1;
    if (!bp_peel(g, base)) return out;  // inconsistent input

    std::vector<uint32_t> guessed;
    BpState final_state = base;
    bool done = base.unresolved == 0;

    while (!done && guessed.size() < n_max) {
        std::optional<uint32_t> node;
        if (node_selection) {
            node = select_guess_node(g, base, guessed);
        } else {
            for (uint32_t v : g.chain)
                if (!known(base, v) && !already(guessed, v)) {
                    node = v;
                    break;
                }
        }
        if (!node) break;  // exhausted eligible nodes
        guessed.push_back(*node);

        BpState attempt = base;
        attempt.value[*node] = 1;
        --attempt.unresolved;
        ++out.iterations;
        if (bp_peel(g, attempt) && attempt.unresolved == 0) {
            final_state = std::move(attempt);
            done = true;
        }
    }
    out.guesses = guessed.size();
    if (!done) return out;  // declare a decoding failure

    out.status = DecodeStatus::Identified;
    out.has_word = true;
    out.word = BitWord(g.tx_len());
    for (size_t i = 0; i < g.tx_len(); ++i)
        if (final_state.value[g.tx_var[i]] > 0) out.word.set(i, true);
    return out;
}

DecodeOutcome bp_bsc_decode(const TannerGraph& g, const BitWord& y, double crossover,
                            size_t max_iters) {
    if (!(crossover > 0 && crossover < 0.5))
        throw std::invalid_argument("bp_bsc_decode: need 0 < crossover < 0.5");
    if (y.size() != g.tx_len()) throw std::invalid_argument("bp_bsc_decode: length mismatch");

    const double l0 = std::log((1 - crossover) / crossover);
    std::vector<double> prior(g.num_vars, 0.0);
    for (size_t i = 0; i < y.size(); ++i)
        prior[g.tx_var[i]] = y.get(i) ? -l0 : l0;  // LLR > 0 favors bit 0

    std::vector<double> total = prior;
    std::vector<int8_t> hard(g.num_vars, 0);
    auto decide = [&] {
        for (size_t v = 0; v < g.num_vars; ++v) hard[v] = total[v] < 0 ? 1 : 0;
    };
    auto satisfied = [&] {
        for (const auto& vars : g.check_vars) {
            uint8_t acc = 0;
            for (uint32_t v : vars) acc ^= static_cast<uint8_t>(hard[v]);
            if (acc) return false;
        }
        return true;
    };

    DecodeOutcome out;
    // Flattened check-to-variable messages.
    std::vector<size_t> offset(g.num_checks + 1, 0);
    for (size_t c = 0; c < g.num_checks; ++c) offset[c + 1] = offset[c] + g.check_vars[c].size();
    std::vector<double> msg(offset.back(), 0.0);

    auto clamp = [](double x) { return std::max(-kLlrClamp, std::min(kLlrClamp, x)); };

    bool ok = false;
    size_t iter = 0;
    decide();
    if (satisfied()) ok = true;
    for (; iter < max_iters && !ok; ) {
        ++iter;
        for (size_t c = 0; c < g.num_checks; ++c) {
            const auto& vars = g.check_vars[c];
            const size_t deg = vars.size();
            double tanhs[32];
            for (size_t e = 0; e < deg; ++e) {
                const double m = clamp(total[vars[e]] - msg[offset[c] + e]);
                tanhs[e] = std::tanh(0.5 * m);
            }
            for (size_t e = 0; e < deg; ++e) {
                double prod = 1.0;
                for (size_t e2 = 0; e2 < deg; ++e2)
                    if (e2 != e) prod *= tanhs[e2];
                prod = std::max(-0.999999999999, std::min(0.999999999999, prod));
                const double updated = 2.0 * std::atanh(prod);
                total[vars[e]] += updated - msg[offset[c] + e];
                msg[offset[c] + e] = updated;
            }
        }
        decide();
        if (satisfied()) ok = true;
    }
    out.iterations = iter;
    if (!ok) return out;  // non-convergence

    out.status = DecodeStatus::Identified;
    out.has_word = true;
    out.word = BitWord(g.tx_len());
    for (size_t i = 0; i < g.tx_len(); ++i)
        if (hard[g.tx_var[i]]) out.word.set(i, true);
    return out;
}

}  // namespace collufp
