#include "collufp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "collufp/analysis.hpp"

namespace collufp {

namespace {

// Substream tags: one isolated seed per randomness purpose.
constexpr uint64_t kTagTrial = 0x7452049a16b24c01ULL;
constexpr uint64_t kTagCodebook = 0x7452049a16b24c02ULL;
constexpr uint64_t kTagKey = 0x7452049a16b24c03ULL;
constexpr uint64_t kTagCoalition = 0x7452049a16b24c04ULL;
constexpr uint64_t kTagAttack = 0x7452049a16b24c05ULL;
constexpr uint64_t kTagPick = 0x7452049a16b24c06ULL;

uint64_t trial_seed(const ExperimentConfig& cfg, size_t trial) {
    return mix_seed(cfg.master_seed, kTagTrial, trial);
}

bool binary_attack(AttackKind a) { return a != AttackKind::Averaging; }

bool materialized_decoder(DecoderKind d) {
    return d == DecoderKind::MdErasure || d == DecoderKind::MdHamming ||
           d == DecoderKind::Likelihood;
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

}  // namespace

const char* to_string(AttackKind a) {
    switch (a) {
        case AttackKind::Averaging: return "averaging";
        case AttackKind::Memoryless: return "memoryless";
        case AttackKind::Xor3: return "xor3";
    }
    return "?";
}

const char* to_string(DecoderKind d) {
    switch (d) {
        case DecoderKind::MdErasure: return "md_erasure";
        case DecoderKind::Syndrome: return "syndrome";
        case DecoderKind::MdHamming: return "md_hamming";
        case DecoderKind::Likelihood: return "likelihood";
        case DecoderKind::ModifiedBp: return "modified_bp";
        case DecoderKind::BpBsc: return "bp_bsc";
    }
    return "?";
}

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), '=', ' ');
        std::istringstream ls(line);
        std::string key, value;
        if (!(ls >> key)) continue;
        if (!(ls >> value)) bad("line " + std::to_string(lineno) + ": missing value for " + key);

        auto as_u64 = [&] { return std::stoull(value); };
        auto as_double = [&] { return std::stod(value); };
        auto as_bool = [&] {
            if (value == "true" || value == "1") return true;
            if (value == "false" || value == "0") return false;
            bad("line " + std::to_string(lineno) + ": boolean expected for " + key);
        };

        if (key == "ensemble") {
            if (value == "iid")
                cfg.ensemble = CodeKind::IID;
            else if (value == "linear")
                cfg.ensemble = CodeKind::Linear;
            else if (value == "coset")
                cfg.ensemble = CodeKind::Coset;
            else if (value == "ra")
                cfg.ensemble = CodeKind::RA;
            else if (value == "protograph")
                cfg.ensemble = CodeKind::Protograph;
            else
                bad("unknown ensemble '" + value + "'");
        } else if (key == "attack") {
            if (value == "averaging")
                cfg.attack = AttackKind::Averaging;
            else if (value == "memoryless")
                cfg.attack = AttackKind::Memoryless;
            else if (value == "xor3")
                cfg.attack = AttackKind::Xor3;
            else
                bad("unknown attack '" + value + "'");
        } else if (key == "decoder") {
            if (value == "md_erasure")
                cfg.decoder = DecoderKind::MdErasure;
            else if (value == "syndrome")
                cfg.decoder = DecoderKind::Syndrome;
            else if (value == "md_hamming")
                cfg.decoder = DecoderKind::MdHamming;
            else if (value == "likelihood")
                cfg.decoder = DecoderKind::Likelihood;
            else if (value == "modified_bp")
                cfg.decoder = DecoderKind::ModifiedBp;
            else if (value == "bp_bsc")
                cfg.decoder = DecoderKind::BpBsc;
            else
                bad("unknown decoder '" + value + "'");
        } else if (key == "n") {
            cfg.n = as_u64();
        } else if (key == "users") {
            cfg.users = as_u64();
        } else if (key == "l") {
            cfg.l = as_u64();
        } else if (key == "info_bits") {
            cfg.info_bits = as_u64();
        } else if (key == "q") {
            cfg.q = as_u64();
        } else if (key == "protograph") {
            cfg.protograph = value;
        } else if (key == "lift") {
            cfg.lift = as_u64();
        } else if (key == "t") {
            cfg.t = as_u64();
        } else if (key == "trials") {
            cfg.trials = as_u64();
        } else if (key == "seed") {
            cfg.master_seed = as_u64();
        } else if (key == "n_max") {
            cfg.n_max = as_u64();
        } else if (key == "node_selection") {
            cfg.node_selection = as_bool();
        } else if (key == "max_iters") {
            cfg.max_iters = as_u64();
        } else if (key == "crossover") {
            cfg.crossover = as_double();
        } else if (key == "fixed_codebook") {
            cfg.fixed_codebook = as_bool();
        } else if (key == "codebook_cap") {
            cfg.codebook_cap = as_u64();
        } else {
            bad("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    return parse(in);
}

void ExperimentConfig::validate() const {
    if (t < 2) bad("t must be >= 2");
    if (trials < 1) bad("trials must be >= 1");

    switch (ensemble) {
        case CodeKind::IID:
            if (n == 0) bad("iid ensemble needs n");
            if (users < 2) bad("iid ensemble needs users >= 2");
            break;
        case CodeKind::Linear:
        case CodeKind::Coset:
            if (n == 0 || l == 0 || l >= n) bad("linear/coset ensemble needs 0 < l < n");
            if (n - l > 62) bad("linear/coset information dimension above 62 is unsupported");
            break;
        case CodeKind::RA:
            if (info_bits == 0 || q < 2) bad("ra ensemble needs info_bits and q >= 2");
            break;
        case CodeKind::Protograph:
            if (protograph.empty()) bad("protograph ensemble needs a spec path");
            break;
    }

    switch (attack) {
        case AttackKind::Averaging:
            break;
        case AttackKind::Memoryless:
            if (t != 2) bad("memoryless attack is defined for t = 2");
            break;
        case AttackKind::Xor3:
            if (t < 3) bad("xor3 attack needs t >= 3");
            break;
    }

    const bool averaged = attack == AttackKind::Averaging;
    switch (decoder) {
        case DecoderKind::MdErasure:
        case DecoderKind::Likelihood:
            if (!averaged) bad("erasure/likelihood decoders require the averaging attack");
            break;
        case DecoderKind::Syndrome:
            if (!averaged || t != 2) bad("syndrome decoder requires t = 2 averaging");
            if (ensemble != CodeKind::Linear && ensemble != CodeKind::Coset)
                bad("syndrome decoder requires a linear or coset ensemble");
            break;
        case DecoderKind::MdHamming:
            if (!binary_attack(attack)) bad("hamming decoder requires a binary attack");
            break;
        case DecoderKind::ModifiedBp:
            if (!averaged || t != 2) bad("modified bp requires t = 2 averaging");
            if (ensemble != CodeKind::RA) bad("modified bp requires the ra ensemble");
            break;
        case DecoderKind::BpBsc:
            if (!binary_attack(attack)) bad("bsc bp requires a binary attack");
            if (ensemble != CodeKind::RA && ensemble != CodeKind::Protograph)
                bad("bsc bp requires a graph ensemble");
            break;
    }

    if (materialized_decoder(decoder)) {
        double lg = 0;
        if (ensemble == CodeKind::IID)
            lg = std::log2(static_cast<double>(users));
        else if (ensemble == CodeKind::Linear || ensemble == CodeKind::Coset)
            lg = static_cast<double>(n - l);
        else if (ensemble == CodeKind::RA)
            lg = static_cast<double>(info_bits);
        else
            bad("exhaustive decoders do not support the protograph ensemble");
        if (lg > std::log2(static_cast<double>(codebook_cap)) + 1e-9)
            bad("codebook exceeds codebook_cap; exhaustive decoding infeasible");
    }
    if (decoder == DecoderKind::BpBsc && !(crossover > 0 && crossover < 0.5))
        bad("crossover must lie in (0, 0.5)");
}

Codebook build_codebook(const ExperimentConfig& cfg, size_t trial) {
    const uint64_t base = cfg.fixed_codebook ? cfg.master_seed : trial_seed(cfg, trial);
    const uint64_t cseed = mix_seed(base, kTagCodebook);
    switch (cfg.ensemble) {
        case CodeKind::IID:
            return Codebook::iid(cfg.n, cfg.users, cseed);
        case CodeKind::Linear:
            return Codebook::linear(cfg.n, cfg.l, cseed);
        case CodeKind::Coset:
            // The key is refreshed per trial even for a fixed code.
            return Codebook::coset(cfg.n, cfg.l, cseed,
                                   mix_seed(trial_seed(cfg, trial), kTagKey));
        case CodeKind::RA:
            return Codebook::ra(cfg.info_bits, cfg.q, cseed);
        case CodeKind::Protograph: {
            ProtographSpec spec = ProtographSpec::load(cfg.protograph);
            const size_t lift = cfg.lift ? cfg.lift : spec.default_lift;
            return Codebook::protograph(spec, lift, cseed);
        }
    }
    throw std::logic_error("build_codebook: unreachable");
}

TrialResult run_trial(const ExperimentConfig& cfg, size_t trial) {
    const uint64_t tseed = trial_seed(cfg, trial);
    TrialResult res;
    res.trial = trial;
    res.trial_seed = tseed;

    const Codebook cb = build_codebook(cfg, trial);
    Rng coal_rng(mix_seed(tseed, kTagCoalition));
    Rng attack_rng(mix_seed(tseed, kTagAttack));
    Rng pick_rng(mix_seed(tseed, kTagPick));

    const Coalition coalition = Coalition::draw(cb, cfg.t, coal_rng);
    res.coalition = coalition.users;

    ForgedCopy y;
    switch (cfg.attack) {
        case AttackKind::Averaging:
            y = averaging_attack(coalition);
            res.erased = erasures_from_average(y).erased.size();
            break;
        case AttackKind::Memoryless:
            y = memoryless_marking_attack(coalition, attack_rng);
            break;
        case AttackKind::Xor3:
            // Three of the t pirates run the attack; the rest stand by.
            y = xor3_attack(coalition.words[0], coalition.words[1], coalition.words[2]);
            break;
    }

    DecodeOutcome out;
    switch (cfg.decoder) {
        case DecoderKind::MdErasure:
            out = md_erasure_decode(cb, y, pick_rng);
            break;
        case DecoderKind::Syndrome:
            out = syndrome_erasure_decode(cb, y, pick_rng);
            break;
        case DecoderKind::MdHamming:
            out = md_hamming_decode(cb, y);
            break;
        case DecoderKind::Likelihood:
            out = likelihood_decode_avg(cb, y, avg_transition_matrix(cfg.t));
            break;
        case DecoderKind::ModifiedBp:
            out = modified_bp_decode(cb.graph(), y, cfg.n_max, cfg.node_selection);
            break;
        case DecoderKind::BpBsc:
            out = bp_bsc_decode(cb.graph(), y.word, cfg.crossover, cfg.max_iters);
            break;
    }

    res.status = out.status;
    res.has_accused = out.has_accused;
    res.accused = out.accused;
    res.guesses = out.guesses;
    res.iterations = out.iterations;

    // Misidentification: the accusation points outside the coalition. A
    // decoder that produced nothing accused no pirate, which counts against
    // it the same way.
    if (out.has_accused) {
        res.misidentified = !coalition.contains(out.accused);
    } else if (out.status != DecodeStatus::Failed && out.has_word) {
        res.misidentified =
            std::find(coalition.words.begin(), coalition.words.end(), out.word) ==
            coalition.words.end();
    } else {
        res.misidentified = true;
    }
    return res;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg, size_t jobs) {
    cfg.validate();
    ExperimentSummary sum;
    sum.config = cfg;
    sum.trials = cfg.trials;

    {
        const Codebook probe = build_codebook(cfg, 0);
        sum.code_length = probe.n();
        sum.rate = probe.rate();
    }

    std::atomic<size_t> next{0};
    std::atomic<size_t> misid{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            const size_t trial = next.fetch_add(1);
            if (trial >= cfg.trials) return;
            try {
                if (run_trial(cfg, trial).misidentified) misid.fetch_add(1);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(cfg.trials);
                return;
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    sum.misid = misid.load();
    sum.pm = static_cast<double>(sum.misid) / static_cast<double>(sum.trials);
    sum.std_error = std::sqrt(sum.pm * (1 - sum.pm) / static_cast<double>(sum.trials));
    return sum;
}

std::string csv_header() { return "ensemble,attack,decoder,n,rate,t,trials,misid,pm,stderr,seed"; }

std::string csv_row(const ExperimentSummary& s) {
    std::ostringstream os;
    os << to_string(s.config.ensemble) << ',' << to_string(s.config.attack) << ','
       << to_string(s.config.decoder) << ',' << s.code_length << ',' << s.rate << ','
       << s.config.t << ',' << s.trials << ',' << s.misid << ',' << s.pm << ','
       << s.std_error << ',' << s.config.master_seed;
    return os.str();
}

}  // namespace collufp
