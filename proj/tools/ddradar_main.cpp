// ddradar: OTFS delay-Doppler radar simulator.
//
//   ddradar sim      --config scenario.json [--snr 10] [--dump dd,corr] [--out prefix]
//   ddradar mc       --config scenario.json [--trials 500] [--parallel auto] [--out rmse.csv]
//   ddradar baseline --config scenario.json          (mc with the OFDM estimator only)
//   ddradar selftest                                  (oracle comparisons)

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ddradar/csv.hpp"
#include "ddradar/harness.hpp"
#include "ddradar/index.hpp"
#include "ddradar/oracles.hpp"
#include "ddradar/scenario_io.hpp"

namespace {

using namespace ddradar;

struct Overrides {
    std::string config;
    std::string out;
    int trials = 0;
    long long seed = -1;
    std::string parallel;
    std::string mode;
    std::string dump;
};

unsigned parse_parallel(const std::string& s) {
    if (s == "auto") return std::max(1u, std::thread::hardware_concurrency());
    const int n = std::stoi(s);
    if (n < 1) throw std::invalid_argument("--parallel must be >= 1 or 'auto'");
    return static_cast<unsigned>(n);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

ScenarioConfig load(const Overrides& o) {
    auto cfg = load_scenario(o.config);
    if (o.trials > 0) cfg.trials = o.trials;
    if (o.seed >= 0) cfg.master_seed = static_cast<std::uint64_t>(o.seed);
    if (!o.parallel.empty()) cfg.parallel = parse_parallel(o.parallel);
    if (!o.mode.empty()) {
        cfg.modes.clear();
        for (const auto& m : split(o.mode)) cfg.modes.push_back(estimator_mode_from_string(m));
    }
    if (!o.dump.empty()) {
        cfg.dump = {};
        for (const auto& d : split(o.dump)) {
            if (d == "dd") cfg.dump.dd = true;
            else if (d == "corr") cfg.dump.corr = true;
            else if (d == "fasttime") cfg.dump.fasttime = true;
            else if (d == "periodogram") cfg.dump.periodogram = true;
            else throw std::invalid_argument("--dump: unknown item '" + d + "'");
        }
    }
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* app, Overrides& o) {
    app->add_option("--config", o.config, "Scenario file (JSON)")->required()->check(CLI::ExistingFile);
    app->add_option("--out", o.out, "Output path (CSV file, or file prefix for sim dumps)");
    app->add_option("--seed", o.seed, "Master seed override")->check(CLI::NonNegativeNumber);
}

template <class F>
void with_output(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    write(f);
}

void dump_matrix(const std::string& prefix, const std::string& name, const CMatrix& m, const std::string& what) {
    const auto path = (prefix.empty() ? std::string("ddradar") : prefix) + "_" + name + ".csv";
    with_output(path, [&](std::ostream& os) { write_complex_matrix_csv(os, m, what); });
    std::cout << "wrote " << path << "\n";
}

int run_sim(const Overrides& o, double snr_db, std::size_t trial) {
    const auto cfg = load(o);
    const auto mode = cfg.modes.front();
    const auto res = simulate(cfg, trial, snr_db, mode);
    const auto& f = cfg.frame;

    std::printf("frame M=%d N=%d  range bin %.4f m  velocity bin %.4f m/s  mode %s  snr %s dB\n", f.M(), f.N(),
                f.range_resolution(), f.velocity_resolution(), to_string(mode).c_str(),
                std::isinf(snr_db) ? "inf" : std::to_string(snr_db).c_str());
    if (!res.channel_warning.empty()) std::printf("warning: %s\n", res.channel_warning.c_str());
    std::printf("%4s %10s %10s %10s %10s %10s %10s %12s %12s\n", "#", "l_tau", "k_nu", "l_hat", "k_hat", "err_l",
                "err_k", "range_m", "vel_mps");
    for (std::size_t i = 0; i < res.truth.size(); ++i) {
        const auto& t = res.truth[i];
        const auto& e = res.estimates[res.pairing[i]];
        std::printf("%4zu %10.4f %10.4f %10.4f %10.4f %10.4f %10.4f %12.3f %12.3f\n", i, t.l_tau, t.k_nu,
                    e.l_tau_hat, e.k_nu_hat, res.errors[i].delay_index, res.errors[i].doppler_index, e.range_hat_m,
                    e.velocity_hat_mps);
    }

    if (mode != EstimatorMode::ofdm_baseline) {
        if (cfg.dump.dd) dump_matrix(o.out, "dd", res.y_dd.values(), "Y_DD: rows Doppler k, columns delay l");
        if (cfg.dump.corr) dump_matrix(o.out, "corr", res.corr.values(), "V: rows Doppler lag k, columns delay lag l");
        if (cfg.dump.fasttime)
            dump_matrix(o.out, "fasttime", res.fasttime, "fast-time/slow-time: rows fast time m, columns pulse n");
    }
    if (cfg.dump.periodogram) {
        if (mode != EstimatorMode::ofdm_baseline) {
            std::fprintf(stderr, "note: periodogram dump needs --mode ofdm\n");
        } else {
            const auto path = (o.out.empty() ? std::string("ddradar") : o.out) + "_periodogram.csv";
            with_output(path, [&](std::ostream& os) {
                write_real_matrix_csv(os, res.periodogram, "OFDM periodogram: rows Doppler, columns delay");
            });
            std::cout << "wrote " << path << "\n";
        }
    }
    return 0;
}

int run_mc(const Overrides& o) {
    const auto cfg = load(o);
    const auto report = rmse_sweep(cfg);
    with_output(o.out, [&](std::ostream& os) { write_rmse_csv(os, cfg, report); });
    for (const auto& r : report.rows)
        if (r.flagged)
            std::fprintf(stderr, "warning: %s at %g dB: %d of %d trials censored\n", to_string(r.mode).c_str(),
                         r.snr_db, r.censored_trials, r.censored_trials + r.trials);
    return 0;
}

int run_selftest(std::uint64_t seed) {
    int failed = 0;
    for (const auto& c : oracles::run_selftest(seed)) {
        std::printf("%s  %-52s err=%.3e tol=%.0e\n", c.pass() ? "PASS" : "FAIL", c.name.c_str(), c.error,
                    c.tolerance);
        failed += c.pass() ? 0 : 1;
    }
    std::printf("%s\n", failed ? "selftest FAILED" : "selftest passed");
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OTFS delay-Doppler radar simulator"};
    app.set_version_flag("--version", ddradar::version());
    app.require_subcommand(1);

    Overrides sim_o, mc_o, base_o;
    double snr = std::numeric_limits<double>::infinity();
    std::size_t trial = 0;
    auto* sim = app.add_subcommand("sim", "Simulate one frame and print the estimates");
    add_common(sim, sim_o);
    sim->add_option("--snr", snr, "SNR in dB (default: noiseless)");
    sim->add_option("--trial", trial, "Trial index selecting the random stream");
    sim->add_option("--mode", sim_o.mode, "fractional|integer|ofdm");
    sim->add_option("--dump", sim_o.dump, "Comma list of dd,corr,fasttime,periodogram");
    sim->add_option("--parallel", sim_o.parallel, "Correlator threads: INT or auto");

    auto* mc = app.add_subcommand("mc", "Monte Carlo RMSE-vs-SNR sweep to CSV");
    add_common(mc, mc_o);
    mc->add_option("--trials", mc_o.trials, "Trials per SNR")->check(CLI::PositiveNumber);
    mc->add_option("--parallel", mc_o.parallel, "Worker threads: INT or auto");
    mc->add_option("--mode", mc_o.mode, "Comma list of fractional,integer,ofdm");

    auto* base = app.add_subcommand("baseline", "RMSE sweep with the OFDM periodogram estimator");
    add_common(base, base_o);
    base->add_option("--trials", base_o.trials, "Trials per SNR")->check(CLI::PositiveNumber);
    base->add_option("--parallel", base_o.parallel, "Worker threads: INT or auto");

    std::uint64_t selftest_seed = 7;
    auto* self = app.add_subcommand("selftest", "Compare the fast kernels with brute-force oracles");
    self->add_option("--seed", selftest_seed, "Seed for the random test inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sim) return run_sim(sim_o, snr, trial);
        if (*mc) return run_mc(mc_o);
        if (*base) {
            base_o.mode = "ofdm";
            return run_mc(base_o);
        }
        if (*self) return run_selftest(selftest_seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
