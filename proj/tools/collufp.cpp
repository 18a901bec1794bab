#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "collufp/analysis.hpp"
#include "collufp/harness.hpp"
#include "collufp/rank_count.hpp"

namespace {

using namespace collufp;

std::optional<uint64_t> env_seed() {
    const char* s = std::getenv("COLLUFP_SEED");
    if (!s || !*s) return std::nullopt;
    return std::stoull(s);
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 std::optional<uint64_t> seed_flag, size_t jobs) {
    ExperimentConfig cfg = ExperimentConfig::load(config_path);
    if (seed_flag)
        cfg.master_seed = *seed_flag;  // flag wins over env and file
    else if (auto es = env_seed())
        cfg.master_seed = *es;
    cfg.validate();

    const ExperimentSummary sum = run_experiment(cfg, jobs);
    const std::string body = csv_header() + "\n" + csv_row(sum) + "\n";
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << body;
    }
    return 0;
}

int cmd_ranktable(unsigned lmax) {
    std::cout << "l m k count\n";
    for (unsigned l = 1; l <= lmax; ++l)
        for (unsigned m = 1; m <= lmax; ++m)
            for (unsigned k = 0; k <= std::min(l, m); ++k) {
                const mpz_class c = count_rank_matrices(l, m, k);
                if (l * m <= 25 && c != brute_force_rank_count(l, m, k))
                    throw std::runtime_error("rank table disagrees with enumeration");
                std::cout << l << ' ' << m << ' ' << k << ' ' << c.get_str() << "\n";
            }
    return 0;
}

int cmd_spectrum(const std::string& ensemble, size_t n, uint64_t users, size_t l, uint64_t seed) {
    Codebook cb = [&] {
        if (ensemble == "iid") return Codebook::iid(n, users, seed);
        if (ensemble == "linear") return Codebook::linear(n, l, seed);
        throw CLI::ValidationError("spectrum supports the iid and linear ensembles");
    }();
    const SpectrumEstimate sp = empirical_distance_spectrum(cb);
    std::cout << "d,pairs\n";
    for (const auto& [d, c] : sp.pair_counts) std::cout << d << ',' << c.get_str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collusion-resistant fingerprinting simulator"};
    app.require_subcommand(1);

    // simulate
    std::string config_path, out_path;
    std::optional<uint64_t> seed_flag;
    size_t jobs = 1;
    auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo experiment from a config file");
    sim->add_option("config", config_path, "Experiment config file")->required();
    sim->add_option("--out", out_path, "Write CSV here instead of stdout");
    sim->add_option("--seed", seed_flag, "Master seed (overrides config and COLLUFP_SEED)");
    sim->add_option("--jobs", jobs, "Worker thread count")->check(CLI::PositiveNumber);

    // analyze
    auto* ana = app.add_subcommand("analyze", "Print a closed-form quantity");
    std::string quantity;
    double p = 0.5, rate_arg = 0.5, eps = 0.05;
    size_t t_arg = 2;
    unsigned l_arg = 3, e_arg = 2;
    ana->add_option("quantity", quantity, "entropy | gv | rate | mi | rankprob")->required();
    ana->add_option("--p", p, "Probability argument (entropy)");
    ana->add_option("--rate", rate_arg, "Code rate argument (gv)");
    ana->add_option("--t", t_arg, "Coalition size (rate, mi)");
    ana->add_option("--l", l_arg, "Parity-check rows (rankprob)");
    ana->add_option("--e", e_arg, "Erased-column count (rankprob)");
    (void)eps;

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "Pairwise distance spectrum of a codebook");
    std::string sp_ensemble = "iid";
    size_t sp_n = 24, sp_l = 12;
    uint64_t sp_users = 64, sp_seed = 1;
    spec->add_option("--ensemble", sp_ensemble, "iid | linear");
    spec->add_option("--n", sp_n, "Code length");
    spec->add_option("--users", sp_users, "Codebook size (iid)");
    spec->add_option("--l", sp_l, "Parity rows (linear)");
    spec->add_option("--seed", sp_seed, "Codebook seed");

    // ranktable
    auto* rt = app.add_subcommand("ranktable", "Exact rank-count table M_b(l, m, k)");
    unsigned lmax = 4;
    rt->add_option("lmax", lmax, "Largest dimension")->required()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) return cmd_simulate(config_path, out_path, seed_flag, jobs);
        if (*ana) {
            if (quantity == "entropy")
                std::cout << binary_entropy(p) << "\n";
            else if (quantity == "gv")
                std::cout << gv_distance(rate_arg) << "\n";
            else if (quantity == "rate")
                std::cout << md_achievable_rate_avg(t_arg) << "\n";
            else if (quantity == "mi")
                std::cout << mutual_info_avg(t_arg) << "\n";
            else if (quantity == "rankprob")
                std::cout << rank_deficiency_probability(l_arg, e_arg) << "\n";
            else {
                std::cerr << "unknown quantity '" << quantity << "'\n";
                return 1;
            }
            return 0;
        }
        if (*spec) return cmd_spectrum(sp_ensemble, sp_n, sp_users, sp_l, sp_seed);
        if (*rt) return cmd_ranktable(lmax);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
