#include <algorithm>
#include <cmath>

#include "ddradar/estimator.hpp"
#include "ddradar/modem.hpp"
#include "ddradar/oracles.hpp"
#include "ddradar/qpsk.hpp"
#include "ddradar/rng.hpp"

namespace ddradar::oracles {

namespace {

double max_diff(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) return INFINITY;
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

template <class Domain>
double max_diff(const Grid<Domain>& a, const Grid<Domain>& b) {
    return max_diff(a.values().data(), b.values().data());
}

std::vector<cplx> random_vector(std::size_t n, Generator& gen) {
    std::vector<cplx> v(n);
    for (auto& x : v) x = gen.complex_normal(1.0);
    return v;
}

template <class G>
G random_grid(int N, int M, Generator& gen) {
    G g(N, M);
    for (auto& x : g.values().data()) x = gen.complex_normal(1.0);
    return g;
}

std::vector<Target> random_integer_targets(const FrameConfig& cfg, int P, Generator& gen) {
    std::vector<int> delays(static_cast<std::size_t>(cfg.M()));
    for (int i = 0; i < cfg.M(); ++i) delays[static_cast<std::size_t>(i)] = i;
    std::vector<Target> out;
    for (int i = 0; i < P; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(gen.uniform() * static_cast<double>(delays.size() - i));
        std::swap(delays[static_cast<std::size_t>(i)], delays[j]);
        Target t;
        t.l_tau = delays[static_cast<std::size_t>(i)];
        t.k_nu = std::floor(gen.uniform() * cfg.N()) - cfg.N() / 2;
        t.gain = std::polar(0.5 + gen.uniform(), 2.0 * 3.141592653589793 * gen.uniform());
        out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto gen = RngStream(seed, 0).generator();

    for (std::size_t L : {1u, 3u, 12u, 64u, 100u, 257u}) {
        const auto x = random_vector(L, gen);
        double e = 0.0;
        for (auto dir : {Direction::forward, Direction::inverse}) {
            std::vector<cplx> y = x;
            DftPlan(L).unitary(y, dir);
            e = std::max(e, max_diff(y, dft_direct(x, dir)));
        }
        out.push_back({"dft length " + std::to_string(L) + " vs direct sum", e, 1e-12});
    }

    const FrameConfig small = FrameConfig::grid(12, 8);
    {
        const auto x = random_grid<DDGrid>(small.N(), small.M(), gen);
        out.push_back({"isfft vs Eq. 1 sum", max_diff(isfft(small, x), isfft_direct(x)), 1e-12});
        const auto y = random_grid<TFGrid>(small.N(), small.M(), gen);
        out.push_back({"sfft vs Eq. 8 sum", max_diff(sfft(small, y), sfft_direct(y)), 1e-12});
        out.push_back({"heisenberg_rect vs sampled Eq. 2",
                       max_diff(heisenberg_rect(small, y).samples(), heisenberg_sampled(small, y).samples()), 1e-12});
        const TimeSeries r(random_vector(small.frame_size(), gen));
        out.push_back({"wigner_rect vs Riemann sum of Eq. 7", max_diff(wigner_rect(small, r), wigner_sampled(small, r)),
                       1e-12});
        out.push_back({"dzt_demod vs Eq. 11 sum", max_diff(dzt_demod(small, r), dzt_direct(small, r)), 1e-12});
        out.push_back({"dzt_demod vs sfft(wigner_rect)", max_diff(dzt_demod(small, r), demodulate(small, r)), 1e-10});
        out.push_back({"demodulate(modulate(X)) = X", max_diff(demodulate(small, modulate(small, x)), x), 1e-10});
    }

    for (int M : {16, 32}) {
        const auto cfg = FrameConfig::grid(M, 16);
        const auto targets = random_integer_targets(cfg, 3, gen);
        const ChannelSpec spec(cfg, targets);
        const auto x = random_qpsk_dd(cfg.N(), cfg.M(), gen);
        const auto y = demodulate(cfg, apply_channel(modulate(cfg, x), spec));
        out.push_back({"full chain vs Eq. 9, M=" + std::to_string(M), max_diff(y, eq9_output(cfg, x, targets)), 1e-9});
    }

    {
        const auto cfg = FrameConfig::grid(8, 8);
        const auto x = random_qpsk_dd(cfg.N(), cfg.M(), gen);
        const auto y = random_grid<DDGrid>(cfg.N(), cfg.M(), gen);
        const auto ref = correlate2d_reference(y, x);
        out.push_back({"correlate2d_reference vs ambiguity sum", max_diff(ref, correlate_ambiguity(cfg, y, x)), 1e-9});
        out.push_back({"correlate2d_fast vs reference 8x8", max_diff(correlate2d_fast(y, x), ref), 1e-9});
        out.push_back({"correlate2d_fast threads=3 vs reference", max_diff(correlate2d_fast(y, x, 3), ref), 1e-9});
    }
    {
        const auto cfg = FrameConfig::grid(24, 10);
        const auto x = random_qpsk_dd(cfg.N(), cfg.M(), gen);
        const auto y = random_grid<DDGrid>(cfg.N(), cfg.M(), gen);
        out.push_back({"correlate2d_fast vs reference 10x24",
                       max_diff(correlate2d_fast(y, x), correlate2d_reference(y, x)), 1e-9});
    }

    {
        const auto cfg = FrameConfig::grid(16, 16);
        Target t;
        t.l_tau = 5;
        t.k_nu = -3;
        const auto h = effective_dd_channel(ChannelSpec(cfg, {t}));
        DDGrid expect(cfg.N(), cfg.M());
        expect(-3, 5) = 1.0;
        out.push_back({"effective channel of integer target is an impulse", max_diff(h, expect), 1e-9});
    }
    return out;
}

}  // namespace ddradar::oracles
