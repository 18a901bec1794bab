#include "collufp/tanner.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace collufp {

void TannerGraph::finalize() {
    num_checks = check_vars.size();
    var_checks.assign(num_vars, {});
    for (size_t c = 0; c < check_vars.size(); ++c)
        for (uint32_t v : check_vars[c]) {
            if (v >= num_vars) throw std::invalid_argument("TannerGraph: variable id out of range");
            var_checks[v].push_back(static_cast<uint32_t>(c));
        }

    tx_var.clear();
    if (var_tx.empty()) var_tx.assign(num_vars, 0);
    for (size_t v = 0; v < num_vars; ++v)
        if (var_tx[v] >= 0) {
            var_tx[v] = static_cast<int32_t>(tx_var.size());
            tx_var.push_back(static_cast<uint32_t>(v));
        }

    chain_pos.assign(num_vars, -1);
    for (size_t i = 0; i < chain.size(); ++i) chain_pos[chain[i]] = static_cast<int32_t>(i);
}

bool TannerGraph::satisfies_checks(const BitWord& assignment) const {
    if (assignment.size() != num_vars)
        throw std::invalid_argument("satisfies_checks: assignment length mismatch");
    for (const auto& vars : check_vars) {
        bool acc = false;
        for (uint32_t v : vars) acc ^= assignment.get(v);
        if (acc) return false;
    }
    return true;
}

TannerGraph build_ra_graph(size_t info_bits, size_t q, const std::vector<uint32_t>& interleaver) {
    const size_t n = q * info_bits;
    if (interleaver.size() != n)
        throw std::invalid_argument("build_ra_graph: interleaver length must be q*|info|");

    TannerGraph g;
    g.num_vars = info_bits + n;
    g.check_vars.resize(n);
    g.var_tx.assign(g.num_vars, -1);
    for (size_t i = 0; i < n; ++i) {
        const uint32_t acc = static_cast<uint32_t>(info_bits + i);
        g.var_tx[acc] = 0;  // transmitted; finalize() renumbers
        auto& vars = g.check_vars[i];
        vars.push_back(static_cast<uint32_t>(interleaver[i] / q));
        if (i > 0) vars.push_back(acc - 1);
        vars.push_back(acc);
        g.chain.push_back(acc);
    }
    g.finalize();
    return g;
}

BitWord ra_codeword(const BitWord& info, size_t q, const std::vector<uint32_t>& interleaver) {
    const size_t n = q * info.size();
    if (interleaver.size() != n)
        throw std::invalid_argument("ra_codeword: interleaver length must be q*|info|");
    BitWord out(n);
    bool acc = false;
    for (size_t i = 0; i < n; ++i) {
        acc ^= info.get(interleaver[i] / q);
        out.set(i, acc);
    }
    return out;
}

std::pair<BitWord, TannerGraph> encode_ra(const BitWord& info, size_t q,
                                          const std::vector<uint32_t>& interleaver) {
    return {ra_codeword(info, q, interleaver), build_ra_graph(info.size(), q, interleaver)};
}

size_t ProtographSpec::tx_cols() const noexcept {
    size_t c = 0;
    for (bool p : punctured)
        if (!p) ++c;
    return c;
}

double ProtographSpec::design_rate() const {
    return static_cast<double>(cols - rows) / static_cast<double>(tx_cols());
}

ProtographSpec ProtographSpec::parse(std::istream& raw) {
    // Strip '#' comments, then tokenize.
    std::string text, line;
    while (std::getline(raw, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text += line;
        text += '\n';
    }
    std::istringstream in(text);

    ProtographSpec spec;
    if (!(in >> spec.rows >> spec.cols >> spec.default_lift) || spec.rows == 0 || spec.cols == 0)
        throw std::invalid_argument("protograph: bad header (want: rows cols lift_default)");
    spec.mult.assign(spec.rows, std::vector<uint32_t>(spec.cols, 0));
    for (size_t r = 0; r < spec.rows; ++r)
        for (size_t c = 0; c < spec.cols; ++c)
            if (!(in >> spec.mult[r][c]))
                throw std::invalid_argument("protograph: base matrix truncated");
    spec.punctured.assign(spec.cols, false);
    std::string tok;
    if (in >> tok) {
        if (tok != "puncture:") throw std::invalid_argument("protograph: unexpected token " + tok);
        size_t col;
        while (in >> col) {
            if (col >= spec.cols) throw std::invalid_argument("protograph: puncture column out of range");
            spec.punctured[col] = true;
        }
    }
    if (spec.tx_cols() == 0) throw std::invalid_argument("protograph: all columns punctured");
    return spec;
}

ProtographSpec ProtographSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("protograph: cannot open " + path);
    return parse(in);
}

TannerGraph lift_protograph(const ProtographSpec& spec, size_t lift, Rng& rng) {
    if (lift < 1) throw std::invalid_argument("lift_protograph: lift must be >= 1");
    for (const auto& row : spec.mult)
        for (uint32_t m : row)
            if (m > lift) throw std::invalid_argument("lift_protograph: multiplicity exceeds lift");

    TannerGraph g;
    g.num_vars = spec.cols * lift;
    g.check_vars.resize(spec.rows * lift);
    g.var_tx.assign(g.num_vars, -1);
    for (size_t c = 0; c < spec.cols; ++c)
        if (!spec.punctured[c])
            for (size_t i = 0; i < lift; ++i) g.var_tx[c * lift + i] = 0;

    // A base edge of multiplicity m becomes m disjoint permutations: compose
    // a shared random inner permutation with distinct cyclic offsets and an
    // independent outer permutation per base edge bundle.
    std::vector<uint32_t> inner(lift), outer(lift);
    for (size_t r = 0; r < spec.rows; ++r) {
        for (size_t c = 0; c < spec.cols; ++c) {
            const uint32_t m = spec.mult[r][c];
            if (m == 0) continue;
            for (size_t i = 0; i < lift; ++i) inner[i] = outer[i] = static_cast<uint32_t>(i);
            rng.shuffle(inner);
            rng.shuffle(outer);
            for (uint32_t j = 0; j < m; ++j)
                for (size_t i = 0; i < lift; ++i) {
                    const size_t check = r * lift + outer[(inner[i] + j) % lift];
                    g.check_vars[check].push_back(static_cast<uint32_t>(c * lift + i));
                }
        }
    }
    g.finalize();
    return g;
}

BitMatrix parity_matrix(const TannerGraph& g) {
    BitMatrix h(g.num_checks, g.num_vars);
    for (size_t c = 0; c < g.num_checks; ++c)
        for (uint32_t v : g.check_vars[c]) h.set(c, v, true);
    return h;
}

}  // namespace collufp
