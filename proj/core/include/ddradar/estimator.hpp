#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddradar/types.hpp"

namespace ddradar {

/// Raised when peak picking cannot supply the requested number of targets.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Phase offset alpha(k, l) of the rectangular-pulse DD input-output relation:
/// 1 for l >= 0, exp(-j2pi k/N) for l < 0.
cplx phase_offset(long k, long l, int N);

/// 2D phase-corrected correlation of the received DD grid `y` against the
/// transmitted grid `x`:
///
///   V[k,l] = sum_n sum_m conj(Y[n,m]) X[[n-k]_N, [m-l]_M] alpha(n-k, m-l)
///            exp(j2pi (m-l) k_s / (NM))
///
/// with k_s the signed Doppler lag of row k and m-l the unwrapped delay
/// difference (m < l selects the wrapped branch of alpha). A noiseless echo
/// with integer indices (k0, l0) and gain h gives V[k0,l0] = MN conj(h).
///
/// Direct evaluation, O(M^2 N^2).
CorrelationMap correlate2d_reference(const DDGrid& y, const DDGrid& x);

/// Same values as correlate2d_reference in O(M^2 N log N).
///
/// The twisted DD shift in V is the Zak image of a time-domain delay-Doppler
/// shift, so V is the discrete cross-ambiguity function of the two frames:
///   V[k,l] = sum_q conj(r[q]) s[[q-l]_MN] exp(j2pi k_s (q-l) / (MN)).
/// The sum over q folds into N-point DFTs over the slow-time samples of each
/// fast-time position. Delay lags are split across `threads` workers; each
/// column of V is written by exactly one worker, so the result does not
/// depend on the thread count.
CorrelationMap correlate2d_fast(const DDGrid& y, const DDGrid& x, unsigned threads = 1);

struct Peak {
    int k_row = 0;  // Doppler row in [0, N)
    int l = 0;      // delay column in [0, M)
    double magnitude = 0.0;
};

struct PeakOptions {
    /// Reject candidates inside the 8-neighbourhood of an already accepted peak.
    bool exclude_neighbors = true;
};

RMatrix magnitude(const CorrelationMap& v);

/// Entries strictly larger than all 8 circular neighbours.
std::vector<Peak> find_local_maxima(const RMatrix& mag);

/// The P largest local maxima, ordered by decreasing magnitude; ties go to
/// the smaller signed Doppler, then the smaller delay. Throws
/// EstimationError when fewer than P maxima exist.
std::vector<Peak> select_peaks(const RMatrix& mag, std::size_t P, const PeakOptions& opts = {});

std::vector<Peak> pick_peaks(const CorrelationMap& v, std::size_t P, const PeakOptions& opts = {});

struct TargetEstimate {
    int k_row = 0;
    int l = 0;
    double l_tau_hat = 0.0;  // l + iota_hat
    double k_nu_hat = 0.0;   // signed(k_row) + kappa_hat
    double range_hat_m = 0.0;
    double velocity_hat_mps = 0.0;
    double peak_magnitude = 0.0;
    bool valid = true;
    std::string error;
};

/// Signed fractional offset from the magnitudes at the peak and at its two
/// neighbours along one axis: the larger neighbour d = +-1 gives
/// d |V_d| / (|V_peak| + |V_d|). Empty when both magnitudes are zero.
std::optional<double> fractional_offset(double peak_mag, double plus_mag, double minus_mag);

/// Difference-based refinement of every peak along the Doppler column and
/// the delay row through the peak.
std::vector<TargetEstimate> refine_fractional(const CorrelationMap& v, std::span<const Peak> peaks,
                                              const FrameConfig& cfg);

/// Integer-bin estimates with zero fractional parts.
std::vector<TargetEstimate> integer_estimates(std::span<const Peak> peaks, const FrameConfig& cfg);

enum class RefineMode { fractional, integer_only };

/// correlate2d_fast -> pick_peaks -> refine_fractional (or integer bins).
std::vector<TargetEstimate> estimate_targets(const FrameConfig& cfg, const DDGrid& y, const DDGrid& x,
                                             std::size_t P, RefineMode mode = RefineMode::fractional,
                                             unsigned threads = 1);

}  // namespace ddradar
