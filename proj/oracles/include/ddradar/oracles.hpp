#pragma once

// Slow, literal evaluations of the defining formulas. Used as ground truth
// by the tests and the `selftest` command. Apart from expected_correlation,
// which drives the core channel with impulses, nothing here calls into the
// core transforms.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ddradar/channel.hpp"
#include "ddradar/dft.hpp"
#include "ddradar/types.hpp"

namespace ddradar::oracles {

/// O(L^2) unitary DFT sum.
std::vector<cplx> dft_direct(std::span<const cplx> x, Direction dir);

/// Quadruple-sum ISFFT / SFFT (Eqs. 1 and 8).
TFGrid isfft_direct(const DDGrid& x_dd);
DDGrid sfft_direct(const TFGrid& y_tf);

/// Heisenberg transform with a unit-energy rectangular pulse on [0, T),
/// evaluated as a continuous-time formula at t = q T / M and scaled by
/// sqrt(T / M) so the samples carry the waveform energy.
TimeSeries heisenberg_sampled(const FrameConfig& cfg, const TFGrid& x_tf);

/// Riemann sum of the Wigner integral (Eq. 7) on the sampling grid.
TFGrid wigner_sampled(const FrameConfig& cfg, const TimeSeries& r);

/// Eq. 11 as written.
DDGrid dzt_direct(const FrameConfig& cfg, const TimeSeries& y_td);

/// Eq. 9 with the Eq. 10 phase offset for integer-index targets, noiseless.
DDGrid eq9_output(const FrameConfig& cfg, const DDGrid& x_dd, std::span<const Target> targets);

/// Cross-ambiguity form of the correlation:
///   V[k,l] = sum_q conj(r[q]) s[[q-l]_MN] exp(j2pi k_s (q-l) / (MN))
/// with r, s the time-domain frames of y and x, summed directly.
CorrelationMap correlate_ambiguity(const FrameConfig& cfg, const DDGrid& y, const DDGrid& x);

/// E[V] over i.i.d. unit-power symbols for a noiseless channel: every DD
/// source position contributes the phase-compensated overlap of its own
/// channel response,
///   E V[k,l] = sum_{n,m} conj((H e_{n-k,m-l})[n,m]) alpha(n-k, m-l) exp(j2pi (m-l) k_s / (NM)),
/// where H e_a is the received grid for a unit impulse at a.
CorrelationMap expected_correlation(const ChannelSpec& spec);

/// Dirichlet-kernel magnitude ratio |sin(pi (d - kappa) / N) / sin(-pi kappa / N)|
/// of the ideal-pulse effective channel, and its small-angle form |d - kappa| / |kappa|.
double dirichlet_ratio(double kappa, int d, int N);
double small_angle_ratio(double kappa, int d);

struct CheckResult {
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass() const { return error <= tolerance; }
};

/// Compares every fast kernel of the core library with its oracle on small
/// random inputs drawn from `seed`.
std::vector<CheckResult> run_selftest(std::uint64_t seed = 7);

}  // namespace ddradar::oracles
