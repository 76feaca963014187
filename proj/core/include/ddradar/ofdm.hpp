#pragma once

#include <cstddef>
#include <vector>

#include "ddradar/estimator.hpp"
#include "ddradar/types.hpp"

namespace ddradar {

// Periodogram OFDM radar baseline. Each of the N OFDM symbols is an M-point
// unitary inverse DFT with a cyclic prefix of cp_len samples, so one symbol
// lasts (M + cp_len) samples at the rate M delta_f.

TimeSeries ofdm_modulate(const TFGrid& x_tf, int cp_len);

/// Strips the cyclic prefixes and applies a unitary M-point DFT per symbol.
TFGrid ofdm_demodulate(const TimeSeries& r, int N, int M, int cp_len);

/// |2D DFT| of the quotient Y_TF / X_TF, zero-padded by `zero_pad` on both
/// axes: inverse DFT over subcarriers (delay), forward DFT over symbols
/// (Doppler). Unnormalized, so an identity channel peaks at MN on (0, 0).
/// Rows are Doppler bins, columns delay bins.
RMatrix ofdm_periodogram(const TFGrid& y_tf, const TFGrid& x_tf, int zero_pad = 1);

/// Integer-bin estimates from the P strongest periodogram peaks. Delay index
/// is column / zero_pad; the Doppler index is the signed row / zero_pad
/// rescaled by M / (M + cp_len) to the OTFS bin 1/(NT).
std::vector<TargetEstimate> ofdm_estimate(const RMatrix& periodogram, std::size_t P, const FrameConfig& cfg,
                                          int cp_len, int zero_pad = 1);

}  // namespace ddradar
