#pragma once

#include <span>
#include <string>
#include <vector>

#include "ddradar/rng.hpp"
#include "ddradar/types.hpp"

namespace ddradar {

/// One point reflector in delay-Doppler index units.
///
/// l_tau = l + iota is the round-trip delay in samples of 1/(M delta_f);
/// k_nu = k + kappa the Doppler shift in bins of 1/(N T). The integer parts
/// are the nearest integers, so iota and kappa lie in [-0.5, 0.5].
struct Target {
    cplx gain{1.0, 0.0};
    double l_tau = 0.0;
    double k_nu = 0.0;

    int delay_bin() const;    // nearest integer of l_tau
    int doppler_bin() const;  // nearest integer of k_nu (signed)
    double iota() const { return l_tau - delay_bin(); }
    double kappa() const { return k_nu - doppler_bin(); }
};

struct DDIndices {
    double l_tau;
    double k_nu;
};

struct PhysicalState {
    double range_m;
    double velocity_mps;
};

/// l_tau = (2R/c) M delta_f, k_nu = (2 f_c V / c) N T.
/// Throws std::domain_error for negative range, a delay beyond the frame or
/// a Doppler outside the unambiguous interval |k_nu| < N/2.
DDIndices physical_to_indices(double range_m, double velocity_mps, const FrameConfig& cfg);
PhysicalState indices_to_physical(double l_tau, double k_nu, const FrameConfig& cfg);

/// Largest unambiguous radial speed, c / (4 f_c T) (k_nu = N/2).
double max_unambiguous_velocity(const FrameConfig& cfg);

enum class SharedDelayPolicy { reject, warn };

/// Validated target list bound to a frame.
class ChannelSpec {
public:
    ChannelSpec(FrameConfig cfg, std::vector<Target> targets,
                SharedDelayPolicy policy = SharedDelayPolicy::reject);

    const FrameConfig& config() const { return cfg_; }
    const std::vector<Target>& targets() const { return targets_; }
    std::size_t size() const { return targets_.size(); }

    /// Non-empty when two targets share an integer delay bin and the
    /// policy allowed it. Estimation accuracy is not guaranteed then.
    const std::string& warning() const { return warning_; }

private:
    FrameConfig cfg_;
    std::vector<Target> targets_;
    std::string warning_;
};

struct NoiseSpec {
    double sigma2 = 0.0;  // per complex sample

    static NoiseSpec from_snr_db(double snr_db);
    /// 10 log10(1 / sigma2) for unit-power symbols.
    double snr_db() const;
};

/// Frame-circular multi-target echo of `s`:
///   r[q] = sum_i h_i exp(j2pi k_nu,i (q - l_tau,i) / (MN)) s_i[q]
/// where s_i is `s` circularly delayed by l_tau,i samples (fractional delays
/// are an exact phase ramp over the length-L DFT with signed bins
/// [-floor(L/2), ceil(L/2))). Works on any length L; the Doppler phase
/// always uses the sample rate M delta_f of `spec`'s frame.
std::vector<cplx> apply_channel_samples(std::span<const cplx> s, const ChannelSpec& spec);

/// apply_channel_samples restricted to one OTFS frame (length MN).
TimeSeries apply_channel(const TimeSeries& s, const ChannelSpec& spec);

/// Adds CN(0, sigma2) to every sample.
TimeSeries add_awgn(const TimeSeries& r, const NoiseSpec& noise, RngStream rng);

/// DD response to a unit impulse at (0, 0):
/// demodulate(apply_channel(modulate(delta_00))).
DDGrid effective_dd_channel(const ChannelSpec& spec);

}  // namespace ddradar
