#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddradar/channel.hpp"
#include "ddradar/estimator.hpp"
#include "ddradar/rng.hpp"
#include "ddradar/types.hpp"

namespace ddradar {

std::string version();

enum class EstimatorMode { fractional, integer_only, ofdm_baseline };

std::string to_string(EstimatorMode mode);
/// Accepts fractional | integer | integer_only | ofdm | ofdm_baseline.
EstimatorMode estimator_mode_from_string(const std::string& name);

struct GainSpec {
    double magnitude = 1.0;
    /// Fixed phase in radians; empty draws a uniform phase per trial.
    std::optional<double> phase_rad;
};

/// A scenario target given either physically or directly in index units.
struct TargetSpec {
    enum class Kind { physical, index };

    Kind kind = Kind::index;
    double range_m = 0.0;
    double velocity_mps = 0.0;
    double l_tau = 0.0;
    double k_nu = 0.0;
    GainSpec gain;

    static TargetSpec physical(double range_m, double velocity_mps, GainSpec gain = {});
    static TargetSpec indices(double l_tau, double k_nu, GainSpec gain = {});
};

struct OfdmOptions {
    /// Cyclic prefix in samples; negative selects ceil(max delay) + 1.
    int cp_len = -1;
    int zero_pad = 1;
};

struct DumpOptions {
    bool dd = false;
    bool corr = false;
    bool fasttime = false;
    bool periodogram = false;

    bool any() const { return dd || corr || fasttime || periodogram; }
};

struct ScenarioConfig {
    FrameConfig frame{128, 64, 39e3, 24e9};
    std::vector<TargetSpec> targets;
    std::vector<double> snr_db{-10, -5, 0, 5, 10, 15, 20};
    int trials = 100;
    std::uint64_t master_seed = 1;
    std::vector<EstimatorMode> modes{EstimatorMode::fractional, EstimatorMode::integer_only};
    unsigned parallel = 1;
    OfdmOptions ofdm;
    DumpOptions dump;
    bool allow_shared_delay = false;

    /// Targets in index units with unit-phase gains; throws when a target
    /// violates the channel invariants.
    std::vector<Target> truth() const;
    int cp_len() const;
    void validate() const;
};

/// Index of the estimate paired with each truth target. Minimises
/// sum (dl/M)^2 + (dk/N)^2 over all P! bijections with circular index
/// differences. Requires equal lengths and P <= 8.
std::vector<std::size_t> associate(std::span<const Target> truth, std::span<const TargetEstimate> estimates,
                                   const FrameConfig& cfg);

struct TargetError {
    double delay_index = 0.0;    // wrapped estimate - truth
    double doppler_index = 0.0;  // wrapped estimate - truth
    double range_m = 0.0;
    double velocity_mps = 0.0;
};

struct TrialOutcome {
    double snr_db = 0.0;
    EstimatorMode mode = EstimatorMode::fractional;
    bool censored = false;
    std::string reason;
    std::vector<TargetError> errors;  // in truth order
};

/// One Monte Carlo frame. The per-trial stream (master_seed, trial_idx)
/// drives the symbols, target phases and noise, so the result is a pure
/// function of the arguments. Estimation failures are returned as
/// censored outcomes.
TrialOutcome run_trial(const ScenarioConfig& cfg, std::size_t trial_idx, double snr_db, EstimatorMode mode);

/// All (snr, mode) outcomes of one trial; noise realisations are shared
/// across SNRs (scaled copies of one unit-variance draw).
std::vector<TrialOutcome> run_trial_all(const ScenarioConfig& cfg, std::size_t trial_idx);

struct RmseRow {
    double snr_db = 0.0;
    EstimatorMode mode = EstimatorMode::fractional;
    int P = 0;
    double rmse_range_m = 0.0;
    double rmse_velocity_mps = 0.0;
    int trials = 0;
    double resolution_range_m = 0.0;
    double resolution_velocity_mps = 0.0;
    int censored_trials = 0;
    bool flagged = false;  // censored fraction above kCensorFlagFraction
};

inline constexpr double kCensorFlagFraction = 0.10;

struct RmseReport {
    std::vector<RmseRow> rows;
};

/// RMSE over trials x P matched errors for every SNR and mode, ordered by
/// mode then SNR. Uses cfg.parallel workers; results do not depend on it.
RmseReport rmse_sweep(const ScenarioConfig& cfg);

/// Everything the `sim` command reports for one frame.
struct SimResult {
    std::vector<Target> truth;
    std::vector<TargetEstimate> estimates;
    std::vector<std::size_t> pairing;
    std::vector<TargetError> errors;
    std::string channel_warning;
    DDGrid y_dd;
    CorrelationMap corr;
    CMatrix fasttime;
    RMatrix periodogram;
};

SimResult simulate(const ScenarioConfig& cfg, std::size_t trial_idx, double snr_db, EstimatorMode mode);

}  // namespace ddradar
