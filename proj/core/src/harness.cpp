#include "ddradar/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ddradar/index.hpp"
#include "ddradar/modem.hpp"
#include "ddradar/ofdm.hpp"
#include "ddradar/qpsk.hpp"

#ifndef DDRADAR_VERSION
#define DDRADAR_VERSION "0.0.0"
#endif

namespace ddradar {

namespace {

// Sub-stream tags within one trial.
constexpr std::uint64_t kSymbolTag = 0;
constexpr std::uint64_t kGainTag = 1;
constexpr std::uint64_t kNoiseTag = 2;
constexpr std::uint64_t kOfdmSymbolTag = 3;
constexpr std::uint64_t kOfdmNoiseTag = 4;

constexpr std::size_t kMaxAssociation = 8;

ChannelSpec trial_channel(const ScenarioConfig& cfg, const RngStream& trial) {
    auto truth = cfg.truth();
    auto gen = trial.child(kGainTag).generator();
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double u = gen.uniform();
        const auto& g = cfg.targets[i].gain;
        const double phase = g.phase_rad ? *g.phase_rad : 2.0 * std::numbers::pi * u;
        truth[i].gain = std::polar(g.magnitude, phase);
    }
    const auto policy = cfg.allow_shared_delay ? SharedDelayPolicy::warn : SharedDelayPolicy::reject;
    return ChannelSpec(cfg.frame, std::move(truth), policy);
}

std::vector<TargetError> score(const std::vector<Target>& truth, const std::vector<TargetEstimate>& est,
                               const std::vector<std::size_t>& pairing, const FrameConfig& frame) {
    std::vector<TargetError> errors(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const auto& e = est[pairing[i]];
        auto& out = errors[i];
        out.delay_index = wrap_difference(e.l_tau_hat - truth[i].l_tau, frame.M());
        out.doppler_index = wrap_difference(e.k_nu_hat - truth[i].k_nu, frame.N());
        out.range_m = out.delay_index * frame.range_resolution();
        out.velocity_mps = out.doppler_index * frame.velocity_resolution();
    }
    return errors;
}

void finish(TrialOutcome& out, const std::vector<Target>& truth, const std::vector<TargetEstimate>& est,
            const FrameConfig& frame) {
    for (const auto& e : est) {
        if (!e.valid) {
            out.censored = true;
            out.reason = e.error;
            return;
        }
    }
    out.errors = score(truth, est, associate(truth, est, frame), frame);
}

struct OtfsFrame {
    DDGrid x;
    TimeSeries echo;
};

OtfsFrame otfs_frame(const ScenarioConfig& cfg, const RngStream& trial, const ChannelSpec& spec) {
    auto gen = trial.child(kSymbolTag).generator();
    auto x = random_qpsk_dd(cfg.frame.N(), cfg.frame.M(), gen);
    auto echo = apply_channel(modulate(cfg.frame, x), spec);
    return {std::move(x), std::move(echo)};
}

struct OfdmFrame {
    TFGrid x;
    TimeSeries echo;
};

OfdmFrame ofdm_frame(const ScenarioConfig& cfg, const RngStream& trial, const ChannelSpec& spec) {
    auto gen = trial.child(kOfdmSymbolTag).generator();
    auto x = random_qpsk_tf(cfg.frame.N(), cfg.frame.M(), gen);
    const auto tx = ofdm_modulate(x, cfg.cp_len());
    return {std::move(x), TimeSeries(apply_channel_samples(tx.samples(), spec))};
}

}  // namespace

std::string version() { return DDRADAR_VERSION; }

std::string to_string(EstimatorMode mode) {
    switch (mode) {
        case EstimatorMode::fractional: return "fractional";
        case EstimatorMode::integer_only: return "integer";
        case EstimatorMode::ofdm_baseline: return "ofdm";
    }
    return "unknown";
}

EstimatorMode estimator_mode_from_string(const std::string& name) {
    if (name == "fractional") return EstimatorMode::fractional;
    if (name == "integer" || name == "integer_only") return EstimatorMode::integer_only;
    if (name == "ofdm" || name == "ofdm_baseline") return EstimatorMode::ofdm_baseline;
    throw std::invalid_argument("unknown estimator mode '" + name + "' (fractional|integer|ofdm)");
}

TargetSpec TargetSpec::physical(double range_m, double velocity_mps, GainSpec gain) {
    TargetSpec t;
    t.kind = Kind::physical;
    t.range_m = range_m;
    t.velocity_mps = velocity_mps;
    t.gain = gain;
    return t;
}

TargetSpec TargetSpec::indices(double l_tau, double k_nu, GainSpec gain) {
    TargetSpec t;
    t.kind = Kind::index;
    t.l_tau = l_tau;
    t.k_nu = k_nu;
    t.gain = gain;
    return t;
}

std::vector<Target> ScenarioConfig::truth() const {
    std::vector<Target> out;
    out.reserve(targets.size());
    for (const auto& t : targets) {
        Target target;
        if (t.kind == TargetSpec::Kind::physical) {
            const auto idx = physical_to_indices(t.range_m, t.velocity_mps, frame);
            target.l_tau = idx.l_tau;
            target.k_nu = idx.k_nu;
        } else {
            target.l_tau = t.l_tau;
            target.k_nu = t.k_nu;
        }
        target.gain = std::polar(t.gain.magnitude, t.gain.phase_rad.value_or(0.0));
        out.push_back(target);
    }
    return out;
}

int ScenarioConfig::cp_len() const {
    if (ofdm.cp_len >= 0) return ofdm.cp_len;
    double max_delay = 0.0;
    for (const auto& t : truth()) max_delay = std::max(max_delay, t.l_tau);
    return std::min(frame.M(), static_cast<int>(std::ceil(max_delay)) + 1);
}

void ScenarioConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("scenario: trials must be >= 1");
    if (targets.empty()) throw std::invalid_argument("scenario: at least one target required");
    if (targets.size() > kMaxAssociation)
        throw std::invalid_argument("scenario: at most 8 targets are supported by the association step");
    if (snr_db.empty()) throw std::invalid_argument("scenario: snr_db list is empty");
    if (modes.empty()) throw std::invalid_argument("scenario: no estimator modes");
    if (ofdm.zero_pad < 1) throw std::invalid_argument("scenario: ofdm.zero_pad must be >= 1");
    if (ofdm.cp_len > frame.M()) throw std::invalid_argument("scenario: ofdm.cp_len must not exceed M");
    for (const auto& t : targets)
        if (!(t.gain.magnitude > 0.0)) throw std::invalid_argument("scenario: target gain magnitude must be > 0");
    const auto policy = allow_shared_delay ? SharedDelayPolicy::warn : SharedDelayPolicy::reject;
    ChannelSpec(frame, truth(), policy);
}

std::vector<std::size_t> associate(std::span<const Target> truth, std::span<const TargetEstimate> estimates,
                                   const FrameConfig& cfg) {
    if (truth.size() != estimates.size())
        throw std::invalid_argument("associate: " + std::to_string(truth.size()) + " truths vs " +
                                    std::to_string(estimates.size()) + " estimates");
    if (truth.size() > kMaxAssociation) throw std::invalid_argument("associate: at most 8 targets");

    const std::size_t P = truth.size();
    std::vector<double> cost(P * P);
    for (std::size_t i = 0; i < P; ++i) {
        for (std::size_t j = 0; j < P; ++j) {
            const double dl = wrap_difference(estimates[j].l_tau_hat - truth[i].l_tau, cfg.M()) / cfg.M();
            const double dk = wrap_difference(estimates[j].k_nu_hat - truth[i].k_nu, cfg.N()) / cfg.N();
            cost[i * P + j] = dl * dl + dk * dk;
        }
    }

    std::vector<std::size_t> perm(P);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double c = 0.0;
        for (std::size_t i = 0; i < P; ++i) c += cost[i * P + perm[i]];
        if (c < best_cost) {
            best_cost = c;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<TrialOutcome> run_trial_all(const ScenarioConfig& cfg, std::size_t trial_idx) {
    const RngStream trial(cfg.master_seed, trial_idx);
    const auto spec = trial_channel(cfg, trial);
    const auto& truth = spec.targets();
    const std::size_t P = truth.size();
    const auto& frame = cfg.frame;

    const bool need_otfs = std::any_of(cfg.modes.begin(), cfg.modes.end(),
                                       [](EstimatorMode m) { return m != EstimatorMode::ofdm_baseline; });
    const bool need_ofdm = std::any_of(cfg.modes.begin(), cfg.modes.end(),
                                       [](EstimatorMode m) { return m == EstimatorMode::ofdm_baseline; });
    std::optional<OtfsFrame> otfs;
    std::optional<OfdmFrame> ofdm;
    if (need_otfs) otfs = otfs_frame(cfg, trial, spec);
    if (need_ofdm) ofdm = ofdm_frame(cfg, trial, spec);

    const std::size_t S = cfg.snr_db.size();
    std::vector<TrialOutcome> out(cfg.modes.size() * S);

    for (std::size_t si = 0; si < S; ++si) {
        const double snr = cfg.snr_db[si];
        const auto noise = NoiseSpec::from_snr_db(snr);

        std::optional<CorrelationMap> corr;
        std::vector<Peak> peaks;
        std::string otfs_failure;
        if (need_otfs) {
            const auto y = demodulate(frame, add_awgn(otfs->echo, noise, trial.child(kNoiseTag)));
            corr = correlate2d_fast(y, otfs->x);
            try {
                peaks = pick_peaks(*corr, P);
            } catch (const EstimationError& e) {
                otfs_failure = e.what();
            }
        }
        std::vector<TargetEstimate> ofdm_est;
        std::string ofdm_failure;
        if (need_ofdm) {
            const auto r = add_awgn(ofdm->echo, noise, trial.child(kOfdmNoiseTag));
            const auto y_tf = ofdm_demodulate(r, frame.N(), frame.M(), cfg.cp_len());
            try {
                ofdm_est = ofdm_estimate(ofdm_periodogram(y_tf, ofdm->x, cfg.ofdm.zero_pad), P, frame, cfg.cp_len(),
                                         cfg.ofdm.zero_pad);
            } catch (const EstimationError& e) {
                ofdm_failure = e.what();
            }
        }

        for (std::size_t mi = 0; mi < cfg.modes.size(); ++mi) {
            auto& o = out[mi * S + si];
            o.snr_db = snr;
            o.mode = cfg.modes[mi];
            const std::string& failure = o.mode == EstimatorMode::ofdm_baseline ? ofdm_failure : otfs_failure;
            if (!failure.empty()) {
                o.censored = true;
                o.reason = failure;
                continue;
            }
            switch (o.mode) {
                case EstimatorMode::fractional: finish(o, truth, refine_fractional(*corr, peaks, frame), frame); break;
                case EstimatorMode::integer_only: finish(o, truth, integer_estimates(peaks, frame), frame); break;
                case EstimatorMode::ofdm_baseline: finish(o, truth, ofdm_est, frame); break;
            }
        }
    }
    return out;
}

TrialOutcome run_trial(const ScenarioConfig& cfg, std::size_t trial_idx, double snr_db, EstimatorMode mode) {
    ScenarioConfig one = cfg;
    one.snr_db = {snr_db};
    one.modes = {mode};
    return run_trial_all(one, trial_idx).front();
}

RmseReport rmse_sweep(const ScenarioConfig& cfg) {
    cfg.validate();
    const auto T = static_cast<std::size_t>(cfg.trials);
    std::vector<std::vector<TrialOutcome>> results(T);

    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.parallel, static_cast<unsigned>(T)));
    if (workers == 1) {
        for (std::size_t t = 0; t < T; ++t) results[t] = run_trial_all(cfg, t);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < T; t = next++) {
                    try {
                        results[t] = run_trial_all(cfg, t);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    const std::size_t S = cfg.snr_db.size();
    const int P = static_cast<int>(cfg.targets.size());
    RmseReport report;
    for (std::size_t mi = 0; mi < cfg.modes.size(); ++mi) {
        for (std::size_t si = 0; si < S; ++si) {
            RmseRow row;
            row.snr_db = cfg.snr_db[si];
            row.mode = cfg.modes[mi];
            row.P = P;
            row.resolution_range_m = cfg.frame.range_resolution();
            row.resolution_velocity_mps = cfg.frame.velocity_resolution();
            double sum_r = 0.0;
            double sum_v = 0.0;
            std::size_t count = 0;
            for (std::size_t t = 0; t < T; ++t) {
                const auto& o = results[t][mi * S + si];
                if (o.censored) {
                    ++row.censored_trials;
                    continue;
                }
                ++row.trials;
                for (const auto& e : o.errors) {
                    sum_r += e.range_m * e.range_m;
                    sum_v += e.velocity_mps * e.velocity_mps;
                    ++count;
                }
            }
            if (count > 0) {
                row.rmse_range_m = std::sqrt(sum_r / static_cast<double>(count));
                row.rmse_velocity_mps = std::sqrt(sum_v / static_cast<double>(count));
            } else {
                row.rmse_range_m = std::numeric_limits<double>::quiet_NaN();
                row.rmse_velocity_mps = std::numeric_limits<double>::quiet_NaN();
            }
            row.flagged = static_cast<double>(row.censored_trials) > kCensorFlagFraction * static_cast<double>(T);
            report.rows.push_back(row);
        }
    }
    return report;
}

SimResult simulate(const ScenarioConfig& cfg, std::size_t trial_idx, double snr_db, EstimatorMode mode) {
    cfg.validate();
    const RngStream trial(cfg.master_seed, trial_idx);
    const auto spec = trial_channel(cfg, trial);
    const auto& frame = cfg.frame;
    const std::size_t P = spec.size();
    const auto noise = NoiseSpec::from_snr_db(snr_db);

    SimResult res;
    res.truth = spec.targets();
    res.channel_warning = spec.warning();

    if (mode == EstimatorMode::ofdm_baseline) {
        const auto f = ofdm_frame(cfg, trial, spec);
        const auto r = add_awgn(f.echo, noise, trial.child(kOfdmNoiseTag));
        const auto y_tf = ofdm_demodulate(r, frame.N(), frame.M(), cfg.cp_len());
        res.periodogram = ofdm_periodogram(y_tf, f.x, cfg.ofdm.zero_pad);
        res.estimates = ofdm_estimate(res.periodogram, P, frame, cfg.cp_len(), cfg.ofdm.zero_pad);
    } else {
        const auto f = otfs_frame(cfg, trial, spec);
        const auto r = add_awgn(f.echo, noise, trial.child(kNoiseTag));
        res.fasttime = fasttime_slowtime(frame, r);
        res.y_dd = demodulate(frame, r);
        res.corr = correlate2d_fast(res.y_dd, f.x, cfg.parallel);
        const auto peaks = pick_peaks(res.corr, P);
        res.estimates = mode == EstimatorMode::fractional ? refine_fractional(res.corr, peaks, frame)
                                                          : integer_estimates(peaks, frame);
    }
    res.pairing = associate(res.truth, res.estimates, frame);
    res.errors = score(res.truth, res.estimates, res.pairing, frame);
    return res;
}

}  // namespace ddradar
