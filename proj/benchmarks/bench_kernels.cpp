#include <benchmark/benchmark.h>

#include "ddradar/channel.hpp"
#include "ddradar/estimator.hpp"
#include "ddradar/harness.hpp"
#include "ddradar/modem.hpp"
#include "ddradar/qpsk.hpp"

using namespace ddradar;

namespace {

struct Frame {
    FrameConfig cfg;
    DDGrid x;
    DDGrid y;
    TimeSeries s;
};

Frame make_frame(int M, int N) {
    FrameConfig cfg = FrameConfig::grid(M, N);
    auto g = RngStream(9, 0).generator();
    DDGrid x = random_qpsk_dd(N, M, g);
    TimeSeries s = modulate(cfg, x);
    Target t;
    t.l_tau = M / 3 + 0.3;
    t.k_nu = -N / 5 - 0.2;
    DDGrid y = demodulate(cfg, add_awgn(apply_channel(s, ChannelSpec(cfg, {t})), NoiseSpec{0.1}, RngStream(9, 1)));
    return {cfg, std::move(x), std::move(y), std::move(s)};
}

void sizes(benchmark::internal::Benchmark* b) {
    for (auto [M, N] : {std::pair{32, 32}, {64, 32}, {128, 64}}) b->Args({M, N});
}

void BM_CorrelateFast(benchmark::State& st) {
    const auto f = make_frame(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(correlate2d_fast(f.y, f.x));
}
BENCHMARK(BM_CorrelateFast)->Apply(sizes)->Unit(benchmark::kMillisecond);

void BM_CorrelateReference(benchmark::State& st) {
    const auto f = make_frame(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(correlate2d_reference(f.y, f.x));
}
BENCHMARK(BM_CorrelateReference)->Apply(sizes)->Unit(benchmark::kMillisecond);

void BM_Modulate(benchmark::State& st) {
    const auto f = make_frame(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(modulate(f.cfg, f.x));
}
BENCHMARK(BM_Modulate)->Apply(sizes)->Unit(benchmark::kMicrosecond);

void BM_Demodulate(benchmark::State& st) {
    const auto f = make_frame(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(demodulate(f.cfg, f.s));
}
BENCHMARK(BM_Demodulate)->Apply(sizes)->Unit(benchmark::kMicrosecond);

void BM_FractionalChannel(benchmark::State& st) {
    const auto f = make_frame(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    std::vector<Target> t(4);
    for (int i = 0; i < 4; ++i) {
        t[i].l_tau = 3.4 + 7 * i;
        t[i].k_nu = -5.3 + 3 * i;
    }
    const ChannelSpec spec(f.cfg, t);
    for (auto _ : st) benchmark::DoNotOptimize(apply_channel(f.s, spec));
}
BENCHMARK(BM_FractionalChannel)->Apply(sizes)->Unit(benchmark::kMicrosecond);

void BM_Trial(benchmark::State& st) {
    ScenarioConfig cfg;
    cfg.frame = FrameConfig(64, 32, 39e3, 24e9);
    cfg.targets = {TargetSpec::indices(6.2, -10.4), TargetSpec::indices(20.6, -2.9), TargetSpec::indices(35.4, 5.1),
                   TargetSpec::indices(49.9, 11.6)};
    cfg.snr_db = {0, 10};
    cfg.modes = {EstimatorMode::fractional, EstimatorMode::integer_only, EstimatorMode::ofdm_baseline};
    std::size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(run_trial_all(cfg, i++));
}
BENCHMARK(BM_Trial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
