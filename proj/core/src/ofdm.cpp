#include "ddradar/ofdm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ddradar/channel.hpp"
#include "ddradar/dft.hpp"
#include "ddradar/index.hpp"

namespace ddradar {

TimeSeries ofdm_modulate(const TFGrid& x_tf, int cp_len) {
    if (cp_len < 0) throw std::invalid_argument("ofdm_modulate: cp_len must be >= 0");
    const auto N = static_cast<std::size_t>(x_tf.N());
    const auto M = static_cast<std::size_t>(x_tf.M());
    const auto cp = static_cast<std::size_t>(cp_len);
    if (cp > M) throw std::invalid_argument("ofdm_modulate: cp_len longer than the symbol");
    const DftPlan plan(M);
    TimeSeries out(N * (M + cp));
    std::vector<cplx> block(M);
    for (std::size_t n = 0; n < N; ++n) {
        const auto row = x_tf.values().row(n);
        std::copy(row.begin(), row.end(), block.begin());
        plan.unitary(block, Direction::inverse);
        const std::size_t base = n * (M + cp);
        for (std::size_t i = 0; i < cp; ++i) out[base + i] = block[M - cp + i];
        for (std::size_t i = 0; i < M; ++i) out[base + cp + i] = block[i];
    }
    return out;
}

TFGrid ofdm_demodulate(const TimeSeries& r, int N, int M, int cp_len) {
    if (cp_len < 0) throw std::invalid_argument("ofdm_demodulate: cp_len must be >= 0");
    const auto sym = static_cast<std::size_t>(M + cp_len);
    if (r.size() != static_cast<std::size_t>(N) * sym)
        throw std::invalid_argument("ofdm_demodulate: expected " + std::to_string(N * sym) + " samples");
    const DftPlan plan(static_cast<std::size_t>(M));
    TFGrid y(N, M);
    for (int n = 0; n < N; ++n) {
        auto row = y.values().row(static_cast<std::size_t>(n));
        const std::size_t base = static_cast<std::size_t>(n) * sym + static_cast<std::size_t>(cp_len);
        for (int m = 0; m < M; ++m) row[static_cast<std::size_t>(m)] = r[base + static_cast<std::size_t>(m)];
        plan.unitary(row, Direction::forward);
    }
    return y;
}

RMatrix ofdm_periodogram(const TFGrid& y_tf, const TFGrid& x_tf, int zero_pad) {
    if (y_tf.N() != x_tf.N() || y_tf.M() != x_tf.M())
        throw std::invalid_argument("ofdm_periodogram: grid shapes differ");
    if (zero_pad < 1) throw std::invalid_argument("ofdm_periodogram: zero_pad must be >= 1");
    const auto N = static_cast<std::size_t>(x_tf.N());
    const auto M = static_cast<std::size_t>(x_tf.M());
    const auto rows = N * static_cast<std::size_t>(zero_pad);
    const auto cols = M * static_cast<std::size_t>(zero_pad);

    CMatrix g(rows, cols);
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = 0; m < M; ++m) {
            const cplx xs = x_tf.values()(n, m);
            if (std::abs(xs) == 0.0)
                throw std::invalid_argument("ofdm_periodogram: zero transmit symbol at (" + std::to_string(n) +
                                            ", " + std::to_string(m) + ")");
            g(n, m) = y_tf.values()(n, m) / xs;
        }
    }

    const DftPlan row_plan(cols);
    for (std::size_t n = 0; n < N; ++n) row_plan.unscaled(g.row(n), Direction::inverse);
    const DftPlan col_plan(rows);
    std::vector<cplx> col(rows);
    RMatrix out(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) col[r] = g(r, c);
        col_plan.unscaled(col, Direction::forward);
        for (std::size_t r = 0; r < rows; ++r) out(r, c) = std::abs(col[r]);
    }
    return out;
}

std::vector<TargetEstimate> ofdm_estimate(const RMatrix& periodogram, std::size_t P, const FrameConfig& cfg,
                                          int cp_len, int zero_pad) {
    if (zero_pad < 1) throw std::invalid_argument("ofdm_estimate: zero_pad must be >= 1");
    if (periodogram.rows() != static_cast<std::size_t>(cfg.N() * zero_pad) ||
        periodogram.cols() != static_cast<std::size_t>(cfg.M() * zero_pad))
        throw std::invalid_argument("ofdm_estimate: periodogram does not match the frame");
    const auto peaks = select_peaks(periodogram, P);
    const double z = zero_pad;
    const double slot_ratio = static_cast<double>(cfg.M()) / (cfg.M() + cp_len);
    std::vector<TargetEstimate> out;
    out.reserve(peaks.size());
    for (const auto& p : peaks) {
        TargetEstimate e;
        e.k_row = p.k_row;
        e.l = p.l;
        e.peak_magnitude = p.magnitude;
        e.l_tau_hat = p.l / z;
        e.k_nu_hat = signed_doppler(p.k_row, cfg.N() * zero_pad) / z * slot_ratio;
        const auto phys = indices_to_physical(e.l_tau_hat, e.k_nu_hat, cfg);
        e.range_hat_m = phys.range_m;
        e.velocity_hat_mps = phys.velocity_mps;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ddradar
