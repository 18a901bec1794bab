#include <doctest.h>

#include <set>
#include <sstream>

#include "collufp/harness.hpp"

using namespace collufp;

namespace {

ExperimentConfig iid_config() {
    ExperimentConfig cfg;
    cfg.ensemble = CodeKind::IID;
    cfg.attack = AttackKind::Averaging;
    cfg.decoder = DecoderKind::MdErasure;
    cfg.n = 32;
    cfg.users = 256;
    cfg.t = 2;
    cfg.trials = 50;
    cfg.master_seed = 99;
    return cfg;
}

}  // namespace

TEST_CASE("config file parsing") {
    std::istringstream in(
        "# comment\n"
        "ensemble = linear\n"
        "attack averaging\n"
        "decoder = syndrome\n"
        "n = 40\n"
        "l = 24\n"
        "t = 2\n"
        "trials = 10   # trailing comment\n"
        "seed = 12345\n");
    const ExperimentConfig cfg = ExperimentConfig::parse(in);
    CHECK(cfg.ensemble == CodeKind::Linear);
    CHECK(cfg.decoder == DecoderKind::Syndrome);
    CHECK(cfg.n == 40);
    CHECK(cfg.l == 24);
    CHECK(cfg.trials == 10);
    CHECK(cfg.master_seed == 12345);
    cfg.validate();

    std::istringstream bad_key("frobnicate = 3\n");
    CHECK_THROWS_AS((void)ExperimentConfig::parse(bad_key), std::invalid_argument);
}

TEST_CASE("config validation rejects incompatible pairings") {
    ExperimentConfig cfg = iid_config();
    cfg.decoder = DecoderKind::MdHamming;  // needs a binary attack
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = iid_config();
    cfg.attack = AttackKind::Memoryless;
    cfg.t = 3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = iid_config();
    cfg.decoder = DecoderKind::Syndrome;  // needs linear/coset
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = iid_config();
    cfg.users = uint64_t{1} << 40;  // beyond the materialization cap
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    cfg = iid_config();
    cfg.t = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("trials are bit-identical under replay") {
    const ExperimentConfig cfg = iid_config();
    for (size_t trial : {size_t{0}, size_t{7}, size_t{23}}) {
        const TrialResult a = run_trial(cfg, trial);
        const TrialResult b = run_trial(cfg, trial);
        CHECK(a.trial_seed == b.trial_seed);
        CHECK(a.coalition == b.coalition);
        CHECK(a.accused == b.accused);
        CHECK(a.misidentified == b.misidentified);
        CHECK(a.erased == b.erased);
    }
}

TEST_CASE("trial seeds are pairwise distinct") {
    const ExperimentConfig cfg = iid_config();
    std::set<uint64_t> seeds;
    for (size_t trial = 0; trial < 1000; ++trial) seeds.insert(run_trial(cfg, trial).trial_seed);
    CHECK(seeds.size() == 1000);
}

TEST_CASE("experiment outcome is independent of worker count") {
    const ExperimentConfig cfg = iid_config();
    const ExperimentSummary serial = run_experiment(cfg, 1);
    const ExperimentSummary threaded = run_experiment(cfg, 4);
    CHECK(serial.misid == threaded.misid);
    CHECK(csv_row(serial) == csv_row(threaded));
}

TEST_CASE("two users cannot be misidentified") {
    ExperimentConfig cfg = iid_config();
    cfg.users = 2;
    cfg.trials = 100;
    const ExperimentSummary sum = run_experiment(cfg);
    CHECK(sum.misid == 0);
    CHECK(sum.pm == 0.0);
}

TEST_CASE("csv output shape") {
    CHECK(csv_header() == "ensemble,attack,decoder,n,rate,t,trials,misid,pm,stderr,seed");
    ExperimentConfig cfg = iid_config();
    cfg.trials = 5;
    const ExperimentSummary sum = run_experiment(cfg);
    const std::string row = csv_row(sum);
    CHECK(row.find("iid,averaging,md_erasure,32,") == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 10);
    CHECK(row.find(",99") == row.size() - 3);
}

TEST_CASE("coset trials refresh the key") {
    ExperimentConfig cfg;
    cfg.ensemble = CodeKind::Coset;
    cfg.attack = AttackKind::Averaging;
    cfg.decoder = DecoderKind::Syndrome;
    cfg.n = 24;
    cfg.l = 14;
    cfg.t = 2;
    cfg.trials = 4;
    cfg.master_seed = 7;
    cfg.fixed_codebook = true;
    cfg.validate();
    const Codebook a = build_codebook(cfg, 0);
    const Codebook b = build_codebook(cfg, 1);
    CHECK(a.parity() == b.parity());  // fixed code
    CHECK(a.key() != b.key());        // fresh key per trial
    (void)run_experiment(cfg);
}
