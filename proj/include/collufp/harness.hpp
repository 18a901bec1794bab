#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "collufp/attacks.hpp"
#include "collufp/codebook.hpp"
#include "collufp/decoders.hpp"

namespace collufp {

enum class AttackKind { Averaging, Memoryless, Xor3 };
enum class DecoderKind { MdErasure, Syndrome, MdHamming, Likelihood, ModifiedBp, BpBsc };

const char* to_string(AttackKind a);
const char* to_string(DecoderKind d);

// One Monte Carlo experiment: ensemble + attack + decoder + trial budget.
// Loaded from a flat key-value file ("key = value", '#' comments).
struct ExperimentConfig {
    CodeKind ensemble = CodeKind::IID;
    AttackKind attack = AttackKind::Averaging;
    DecoderKind decoder = DecoderKind::MdErasure;

    // Ensemble parameters (which ones apply depends on the kind).
    size_t n = 0;              // iid / linear / coset
    uint64_t users = 0;        // iid
    size_t l = 0;              // linear / coset: parity rows
    size_t info_bits = 0;      // ra
    size_t q = 0;              // ra repeat factor
    std::string protograph;    // protograph file path
    size_t lift = 0;           // protograph (0: file default)

    size_t t = 2;
    size_t trials = 100;
    uint64_t master_seed = 0;

    // Decoder parameters.
    size_t n_max = 8;          // modified bp guess budget
    bool node_selection = true;
    size_t max_iters = 60;     // bsc bp
    double crossover = 0.25;   // bsc bp

    bool fixed_codebook = false;
    uint64_t codebook_cap = uint64_t{1} << 20;

    static ExperimentConfig parse(std::istream& in);
    static ExperimentConfig load(const std::string& path);

    // Throws std::invalid_argument on incompatible or missing settings.
    void validate() const;
};

struct TrialResult {
    size_t trial = 0;
    uint64_t trial_seed = 0;
    std::vector<uint64_t> coalition;
    DecodeStatus status = DecodeStatus::Failed;
    bool has_accused = false;
    uint64_t accused = 0;
    bool misidentified = true;
    size_t erased = 0;      // averaging attacks: |E|
    size_t guesses = 0;
    size_t iterations = 0;
};

struct ExperimentSummary {
    ExperimentConfig config;
    size_t code_length = 0;  // realized n (graph codes derive it)
    double rate = 0;
    size_t trials = 0;
    size_t misid = 0;
    double pm = 0;
    double std_error = 0;
};

// Builds the trial's codebook deterministically from the config seeds.
Codebook build_codebook(const ExperimentConfig& cfg, size_t trial);

TrialResult run_trial(const ExperimentConfig& cfg, size_t trial);

// Runs every trial (jobs > 1 splits them across threads; the per-trial
// seeding makes the outcome independent of the schedule).
ExperimentSummary run_experiment(const ExperimentConfig& cfg, size_t jobs = 1);

// CSV: ensemble,attack,decoder,n,rate,t,trials,misid,pm,stderr,seed
std::string csv_header();
std::string csv_row(const ExperimentSummary& s);

}  // namespace collufp
