#pragma once

#include "ddradar/types.hpp"

namespace ddradar {

// OTFS modem with rectangular transmit/receive pulses, realized at the
// critical sampling rate M * delta_f with no cyclic prefix. Sample q of the
// frame is taken at t = q T / M. All transforms are unitary.
//
// Every function throws std::invalid_argument when the input dimensions do
// not match `cfg`.

/// DD -> TF:  X_TF[n,m] = 1/sqrt(NM) sum_k sum_l X_DD[k,l] exp(j2pi(nk/N - ml/M)).
TFGrid isfft(const FrameConfig& cfg, const DDGrid& x_dd);

/// TF -> DD, the exact inverse of isfft.
DDGrid sfft(const FrameConfig& cfg, const TFGrid& y_tf);

/// Block-wise inverse DFT of each time slot, blocks concatenated.
TimeSeries heisenberg_rect(const FrameConfig& cfg, const TFGrid& x_tf);

/// Block-wise forward DFT; the matched filter of heisenberg_rect.
TFGrid wigner_rect(const FrameConfig& cfg, const TimeSeries& r);

/// Discrete Zak transform: Y[k,l] = 1/sqrt(N) sum_n y[l + nM] exp(-j2pi nk/N).
DDGrid dzt_demod(const FrameConfig& cfg, const TimeSeries& y_td);

/// Inverse discrete Zak transform, s[l + nM] = 1/sqrt(N) sum_k X[k,l] exp(j2pi nk/N).
TimeSeries dzt_mod(const FrameConfig& cfg, const DDGrid& x_dd);

/// Fast-time / slow-time matrix: M rows (fast time m), N columns (pulse n),
/// entry (m, n) = y[m + nM].
CMatrix fasttime_slowtime(const FrameConfig& cfg, const TimeSeries& y_td);

/// Column-major flatten of a fast-time / slow-time matrix back to samples.
TimeSeries flatten_fasttime(const CMatrix& r);

/// heisenberg_rect(isfft(x_dd)).
TimeSeries modulate(const FrameConfig& cfg, const DDGrid& x_dd);

/// sfft(wigner_rect(r)).
DDGrid demodulate(const FrameConfig& cfg, const TimeSeries& r);

}  // namespace ddradar
