#include "ddradar/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "ddradar/channel.hpp"
#include "ddradar/dft.hpp"
#include "ddradar/index.hpp"

namespace ddradar {

namespace {

cplx unit_phase(double cycles) {
    const double a = 2.0 * std::numbers::pi * cycles;
    return {std::cos(a), std::sin(a)};
}

void require_same_shape(const DDGrid& y, const DDGrid& x, const char* what) {
    if (y.N() != x.N() || y.M() != x.M())
        throw std::invalid_argument(std::string(what) + ": received and transmitted grids differ in shape");
}

// Inverse Zak transform without a FrameConfig: per delay column, a unitary
// inverse DFT across the N Doppler rows; sample l + nM holds row n.
std::vector<cplx> inverse_zak(const DDGrid& g, const DftPlan& plan) {
    const auto N = static_cast<std::size_t>(g.N());
    const auto M = static_cast<std::size_t>(g.M());
    std::vector<cplx> out(N * M);
    std::vector<cplx> col(N);
    for (std::size_t l = 0; l < M; ++l) {
        for (std::size_t k = 0; k < N; ++k) col[k] = g.values()(k, l);
        plan.unitary(col, Direction::inverse);
        for (std::size_t n = 0; n < N; ++n) out[l + n * M] = col[n];
    }
    return out;
}

}  // namespace

cplx phase_offset(long k, long l, int N) {
    if (l >= 0) return {1.0, 0.0};
    return unit_phase(-static_cast<double>(wrap_index(k, N)) / N);
}

CorrelationMap correlate2d_reference(const DDGrid& y, const DDGrid& x) {
    require_same_shape(y, x, "correlate2d_reference");
    const int N = x.N();
    const int M = x.M();
    const double NM = static_cast<double>(N) * M;
    CorrelationMap v(N, M);
    std::vector<cplx> delay_phase(2 * static_cast<std::size_t>(M));  // index d + M, d in (-M, M)

    for (int k = 0; k < N; ++k) {
        const int ks = signed_doppler(k, N);
        for (int d = -M + 1; d < M; ++d) delay_phase[d + M] = unit_phase(static_cast<double>(d) * ks / NM);
        for (int l = 0; l < M; ++l) {
            cplx acc{};
            for (int n = 0; n < N; ++n) {
                const int dn = n - k;
                const auto xrow = x.values().row(static_cast<std::size_t>(wrap_index(dn, N)));
                const auto yrow = y.values().row(static_cast<std::size_t>(n));
                const cplx wrapped = phase_offset(dn, -1, N);
                for (int m = 0; m < M; ++m) {
                    const int dm = m - l;
                    const cplx xs = xrow[static_cast<std::size_t>(dm < 0 ? dm + M : dm)];
                    const cplx alpha = dm < 0 ? wrapped : cplx{1.0, 0.0};
                    acc += std::conj(yrow[m]) * xs * alpha * delay_phase[dm + M];
                }
            }
            v.values()(k, l) = acc;
        }
    }
    return v;
}

CorrelationMap correlate2d_fast(const DDGrid& y, const DDGrid& x, unsigned threads) {
    require_same_shape(y, x, "correlate2d_fast");
    const auto N = static_cast<std::size_t>(x.N());
    const auto M = static_cast<std::size_t>(x.M());
    const std::size_t L = N * M;

    const DftPlan plan(N);
    const auto s = inverse_zak(x, plan);
    auto r = inverse_zak(y, plan);
    for (auto& v : r) v = std::conj(v);

    // twiddle(k, d + M) = exp(j2pi k_s d / (MN)), d in (-M, M)
    CMatrix twiddle(N, 2 * M);
    for (std::size_t k = 0; k < N; ++k) {
        const int ks = signed_doppler(static_cast<int>(k), static_cast<int>(N));
        for (long d = -static_cast<long>(M) + 1; d < static_cast<long>(M); ++d)
            twiddle(k, static_cast<std::size_t>(d + static_cast<long>(M))) =
                unit_phase(static_cast<double>(d) * ks / static_cast<double>(L));
    }

    CorrelationMap out(static_cast<int>(N), static_cast<int>(M));
    auto work = [&](std::size_t l_begin, std::size_t l_end) {
        CMatrix folded(M, N);  // row m': N-point inverse DFT over slow time
        for (std::size_t l = l_begin; l < l_end; ++l) {
            for (std::size_t mp = 0; mp < M; ++mp) {
                auto row = folded.row(mp);
                for (std::size_t n = 0; n < N; ++n) {
                    const std::size_t q = mp + n * M;
                    const std::size_t src = q >= l ? q - l : q + L - l;
                    row[n] = r[q] * s[src];
                }
                plan.unscaled(row, Direction::inverse);
            }
            for (std::size_t k = 0; k < N; ++k) {
                cplx acc{};
                for (std::size_t mp = 0; mp < M; ++mp) acc += twiddle(k, mp + M - l) * folded(mp, k);
                out.values()(k, l) = acc;
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(M)));
    if (workers == 1) {
        work(0, M);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (M + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t b = w * chunk;
            const std::size_t e = std::min(M, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& t : pool) t.join();
    }
    return out;
}

RMatrix magnitude(const CorrelationMap& v) {
    RMatrix mag(v.values().rows(), v.values().cols());
    const auto src = v.values().data();
    auto dst = mag.data();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = std::abs(src[i]);
    return mag;
}

std::vector<Peak> find_local_maxima(const RMatrix& mag) {
    const long N = static_cast<long>(mag.rows());
    const long M = static_cast<long>(mag.cols());
    std::vector<Peak> peaks;
    for (long k = 0; k < N; ++k) {
        for (long l = 0; l < M; ++l) {
            const double centre = mag(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
            bool is_peak = true;
            for (long dk = -1; dk <= 1 && is_peak; ++dk) {
                for (long dl = -1; dl <= 1; ++dl) {
                    if (dk == 0 && dl == 0) continue;
                    const long nk = wrap_index(k + dk, N);
                    const long nl = wrap_index(l + dl, M);
                    if (nk == k && nl == l) continue;
                    if (!(centre > mag(static_cast<std::size_t>(nk), static_cast<std::size_t>(nl)))) {
                        is_peak = false;
                        break;
                    }
                }
            }
            if (is_peak) peaks.push_back({static_cast<int>(k), static_cast<int>(l), centre});
        }
    }
    return peaks;
}

std::vector<Peak> select_peaks(const RMatrix& mag, std::size_t P, const PeakOptions& opts) {
    if (P == 0) throw std::invalid_argument("select_peaks: P must be >= 1");
    const int N = static_cast<int>(mag.rows());
    const int M = static_cast<int>(mag.cols());
    auto candidates = find_local_maxima(mag);
    std::sort(candidates.begin(), candidates.end(), [N](const Peak& a, const Peak& b) {
        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
        const int ka = signed_doppler(a.k_row, N);
        const int kb = signed_doppler(b.k_row, N);
        if (ka != kb) return ka < kb;
        return a.l < b.l;
    });

    auto adjacent = [N, M](const Peak& a, const Peak& b) {
        const long dk = wrap_index(a.k_row - b.k_row, N);
        const long dl = wrap_index(a.l - b.l, M);
        return (dk <= 1 || dk == N - 1) && (dl <= 1 || dl == M - 1);
    };

    std::vector<Peak> chosen;
    for (const auto& c : candidates) {
        if (chosen.size() == P) break;
        if (opts.exclude_neighbors &&
            std::any_of(chosen.begin(), chosen.end(), [&](const Peak& p) { return adjacent(p, c); }))
            continue;
        chosen.push_back(c);
    }
    if (chosen.size() < P)
        throw EstimationError("pick_peaks: requested " + std::to_string(P) + " peaks but found only " +
                              std::to_string(chosen.size()) + " local maxima (" +
                              std::to_string(candidates.size()) + " before exclusion)");
    return chosen;
}

std::vector<Peak> pick_peaks(const CorrelationMap& v, std::size_t P, const PeakOptions& opts) {
    return select_peaks(magnitude(v), P, opts);
}

std::optional<double> fractional_offset(double peak_mag, double plus_mag, double minus_mag) {
    const bool up = plus_mag > minus_mag;
    const double second = up ? plus_mag : minus_mag;
    const double denom = peak_mag + second;
    if (!(denom > 0.0)) return std::nullopt;
    return (up ? 1.0 : -1.0) * second / denom;
}

std::vector<TargetEstimate> refine_fractional(const CorrelationMap& v, std::span<const Peak> peaks,
                                              const FrameConfig& cfg) {
    if (!v.matches(cfg)) throw std::invalid_argument("refine_fractional: map does not match the frame");
    std::vector<TargetEstimate> out;
    out.reserve(peaks.size());
    for (const auto& p : peaks) {
        TargetEstimate e;
        e.k_row = p.k_row;
        e.l = p.l;
        const double centre = std::abs(v(p.k_row, p.l));
        e.peak_magnitude = centre;

        const auto kappa = fractional_offset(centre, std::abs(v(p.k_row + 1, p.l)), std::abs(v(p.k_row - 1, p.l)));
        const auto iota = fractional_offset(centre, std::abs(v(p.k_row, p.l + 1)), std::abs(v(p.k_row, p.l - 1)));
        if (!kappa || !iota) {
            e.valid = false;
            e.error = "zero magnitude at peak and neighbour";
        }
        e.k_nu_hat = signed_doppler(p.k_row, cfg.N()) + kappa.value_or(0.0);
        e.l_tau_hat = p.l + iota.value_or(0.0);
        const auto phys = indices_to_physical(e.l_tau_hat, e.k_nu_hat, cfg);
        e.range_hat_m = phys.range_m;
        e.velocity_hat_mps = phys.velocity_mps;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<TargetEstimate> integer_estimates(std::span<const Peak> peaks, const FrameConfig& cfg) {
    std::vector<TargetEstimate> out;
    out.reserve(peaks.size());
    for (const auto& p : peaks) {
        TargetEstimate e;
        e.k_row = p.k_row;
        e.l = p.l;
        e.peak_magnitude = p.magnitude;
        e.k_nu_hat = signed_doppler(p.k_row, cfg.N());
        e.l_tau_hat = p.l;
        const auto phys = indices_to_physical(e.l_tau_hat, e.k_nu_hat, cfg);
        e.range_hat_m = phys.range_m;
        e.velocity_hat_mps = phys.velocity_mps;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<TargetEstimate> estimate_targets(const FrameConfig& cfg, const DDGrid& y, const DDGrid& x,
                                             std::size_t P, RefineMode mode, unsigned threads) {
    if (!y.matches(cfg) || !x.matches(cfg)) throw std::invalid_argument("estimate_targets: grid/frame mismatch");
    const auto v = correlate2d_fast(y, x, threads);
    const auto peaks = pick_peaks(v, P);
    return mode == RefineMode::fractional ? refine_fractional(v, peaks, cfg) : integer_estimates(peaks, cfg);
}

}  // namespace ddradar
