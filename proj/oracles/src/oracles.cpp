#include "ddradar/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ddradar/index.hpp"
#include "ddradar/modem.hpp"

namespace ddradar::oracles {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx cis(double cycles) { return std::polar(1.0, kTwoPi * cycles); }

// exp(j2pi a b / L) with the product reduced modulo L first.
cplx root(long a, long b, long L) {
    const long r = wrap_index(a * b, L);
    return cis(static_cast<double>(r) / static_cast<double>(L));
}

cplx alpha(long k, long l, int N) { return l >= 0 ? cplx{1.0, 0.0} : root(-k, 1, N); }

}  // namespace

std::vector<cplx> dft_direct(std::span<const cplx> x, Direction dir) {
    const long L = static_cast<long>(x.size());
    if (L == 0) throw std::invalid_argument("dft_direct: empty input");
    const long sign = dir == Direction::forward ? -1 : 1;
    std::vector<cplx> out(x.size());
    for (long f = 0; f < L; ++f) {
        cplx acc{};
        for (long t = 0; t < L; ++t) acc += x[t] * root(sign * f, t, L);
        out[f] = acc / std::sqrt(static_cast<double>(L));
    }
    return out;
}

TFGrid isfft_direct(const DDGrid& x_dd) {
    const int N = x_dd.N(), M = x_dd.M();
    TFGrid out(N, M);
    const double s = 1.0 / std::sqrt(static_cast<double>(N) * M);
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < M; ++m) {
            cplx acc{};
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < M; ++l) acc += x_dd(k, l) * root(n, k, N) * root(-m, l, M);
            out(n, m) = acc * s;
        }
    return out;
}

DDGrid sfft_direct(const TFGrid& y_tf) {
    const int N = y_tf.N(), M = y_tf.M();
    DDGrid out(N, M);
    const double s = 1.0 / std::sqrt(static_cast<double>(N) * M);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < M; ++l) {
            cplx acc{};
            for (int n = 0; n < N; ++n)
                for (int m = 0; m < M; ++m) acc += y_tf(n, m) * root(-n, k, N) * root(m, l, M);
            out(k, l) = acc * s;
        }
    return out;
}

TimeSeries heisenberg_sampled(const FrameConfig& cfg, const TFGrid& x_tf) {
    const int N = cfg.N(), M = cfg.M();
    const double T = cfg.T();
    const double dt = T / M;
    const double g = 1.0 / std::sqrt(T);
    TimeSeries s(cfg.frame_size());
    for (std::size_t q = 0; q < s.size(); ++q) {
        const double t = static_cast<double>(q) * dt;
        cplx acc{};
        for (int n = 0; n < N; ++n) {
            const double u = t - n * T;
            // rectangular support [0, T), judged half a sample inside the edges
            if (u < -0.5 * dt || u >= T - 0.5 * dt) continue;
            for (int m = 0; m < M; ++m) acc += x_tf(n, m) * g * cis(m * cfg.delta_f() * u);
        }
        s[q] = acc * std::sqrt(dt);
    }
    return s;
}

TFGrid wigner_sampled(const FrameConfig& cfg, const TimeSeries& r) {
    if (r.size() != cfg.frame_size()) throw std::invalid_argument("wigner_sampled: length mismatch");
    const int N = cfg.N(), M = cfg.M();
    const double T = cfg.T();
    const double dt = T / M;
    const double g = 1.0 / std::sqrt(T);
    TFGrid y(N, M);
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < M; ++m) {
            cplx acc{};
            for (std::size_t q = 0; q < r.size(); ++q) {
                const double u = static_cast<double>(q) * dt - n * T;
                if (u < -0.5 * dt || u >= T - 0.5 * dt) continue;
                acc += (r[q] / std::sqrt(dt)) * g * cis(-m * cfg.delta_f() * u) * dt;
            }
            y(n, m) = acc;
        }
    return y;
}

DDGrid dzt_direct(const FrameConfig& cfg, const TimeSeries& y_td) {
    if (y_td.size() != cfg.frame_size()) throw std::invalid_argument("dzt_direct: length mismatch");
    const int N = cfg.N(), M = cfg.M();
    DDGrid out(N, M);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < M; ++l) {
            cplx acc{};
            for (int n = 0; n < N; ++n) acc += y_td[static_cast<std::size_t>(l + n * M)] * root(-n, k, N);
            out(k, l) = acc / std::sqrt(static_cast<double>(N));
        }
    return out;
}

DDGrid eq9_output(const FrameConfig& cfg, const DDGrid& x_dd, std::span<const Target> targets) {
    const int N = cfg.N(), M = cfg.M();
    const long MN = static_cast<long>(cfg.frame_size());
    DDGrid y(N, M);
    for (const auto& t : targets) {
        const long lt = std::lround(t.l_tau);
        const long kv = std::lround(t.k_nu);
        if (std::abs(t.l_tau - lt) > 1e-12 || std::abs(t.k_nu - kv) > 1e-12)
            throw std::invalid_argument("eq9_output: integer indices only");
        for (long k = 0; k < N; ++k)
            for (long l = 0; l < M; ++l)
                y(k, l) += t.gain * root(l - lt, kv, MN) * alpha(k - kv, l - lt, N) * x_dd(k - kv, l - lt);
    }
    return y;
}

CorrelationMap correlate_ambiguity(const FrameConfig& cfg, const DDGrid& y, const DDGrid& x) {
    const auto r = heisenberg_sampled(cfg, isfft_direct(y));
    const auto s = heisenberg_sampled(cfg, isfft_direct(x));
    const int N = cfg.N(), M = cfg.M();
    const long MN = static_cast<long>(cfg.frame_size());
    CorrelationMap v(N, M);
    for (int k = 0; k < N; ++k) {
        const long p = signed_doppler(k, N);
        for (long l = 0; l < M; ++l) {
            cplx acc{};
            for (long q = 0; q < MN; ++q)
                acc += std::conj(r[static_cast<std::size_t>(q)]) * s[static_cast<std::size_t>(wrap_index(q - l, MN))] *
                       root(p, q - l, MN);
            v(k, l) = acc;
        }
    }
    return v;
}

CorrelationMap expected_correlation(const ChannelSpec& spec) {
    const auto& cfg = spec.config();
    const int N = cfg.N(), M = cfg.M();
    const long MN = static_cast<long>(cfg.frame_size());

    // response[a] = H e_a for every source position a = (ak, al)
    std::vector<DDGrid> response;
    response.reserve(cfg.frame_size());
    for (int ak = 0; ak < N; ++ak)
        for (int al = 0; al < M; ++al) {
            DDGrid e(N, M);
            e(ak, al) = 1.0;
            response.push_back(demodulate(cfg, apply_channel(modulate(cfg, e), spec)));
        }

    CorrelationMap v(N, M);
    for (long k = 0; k < N; ++k) {
        const long ks = signed_doppler(static_cast<int>(k), N);
        for (long l = 0; l < M; ++l) {
            cplx acc{};
            for (long n = 0; n < N; ++n)
                for (long m = 0; m < M; ++m) {
                    const auto a = static_cast<std::size_t>(wrap_index(n - k, N) * M + wrap_index(m - l, M));
                    acc += std::conj(response[a](n, m)) * alpha(n - k, m - l, N) * root(m - l, ks, MN);
                }
            v(k, l) = acc;
        }
    }
    return v;
}

double dirichlet_ratio(double kappa, int d, int N) {
    return std::abs(std::sin(std::numbers::pi * (d - kappa) / N) / std::sin(-std::numbers::pi * kappa / N));
}

double small_angle_ratio(double kappa, int d) { return std::abs(d - kappa) / std::abs(kappa); }

}  // namespace ddradar::oracles
