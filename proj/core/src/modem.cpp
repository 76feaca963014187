#include "ddradar/modem.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "ddradar/dft.hpp"

namespace ddradar {

namespace {

void require_grid(const FrameConfig& cfg, int N, int M, const char* what) {
    if (N != cfg.N() || M != cfg.M())
        throw std::invalid_argument(std::string(what) + ": grid is " + std::to_string(N) + "x" +
                                    std::to_string(M) + ", frame expects " + std::to_string(cfg.N()) +
                                    "x" + std::to_string(cfg.M()));
}

void require_length(const FrameConfig& cfg, std::size_t n, const char* what) {
    if (n != cfg.frame_size())
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(cfg.frame_size()) +
                                    " samples, got " + std::to_string(n));
}

// Unitary DFT along every row (the fast axis).
void transform_rows(CMatrix& a, Direction dir) {
    const DftPlan plan(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) plan.unitary(a.row(r), dir);
}

// Unitary DFT along every column (the slow axis).
void transform_cols(CMatrix& a, Direction dir) {
    const DftPlan plan(a.rows());
    std::vector<cplx> col(a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) col[r] = a(r, c);
        plan.unitary(col, dir);
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) = col[r];
    }
}

CMatrix as_blocks(const FrameConfig& cfg, const TimeSeries& s) {
    CMatrix blocks(static_cast<std::size_t>(cfg.N()), static_cast<std::size_t>(cfg.M()));
    std::copy(s.vec().begin(), s.vec().end(), blocks.data().begin());
    return blocks;
}

TimeSeries from_blocks(const CMatrix& blocks) {
    return TimeSeries(std::vector<cplx>(blocks.data().begin(), blocks.data().end()));
}

}  // namespace

TFGrid isfft(const FrameConfig& cfg, const DDGrid& x_dd) {
    require_grid(cfg, x_dd.N(), x_dd.M(), "isfft");
    CMatrix a = x_dd.values();
    transform_cols(a, Direction::inverse);  // k -> n, exp(+j2pi nk/N)
    transform_rows(a, Direction::forward);  // l -> m, exp(-j2pi ml/M)
    return TFGrid(std::move(a));
}

DDGrid sfft(const FrameConfig& cfg, const TFGrid& y_tf) {
    require_grid(cfg, y_tf.N(), y_tf.M(), "sfft");
    CMatrix a = y_tf.values();
    transform_cols(a, Direction::forward);
    transform_rows(a, Direction::inverse);
    return DDGrid(std::move(a));
}

TimeSeries heisenberg_rect(const FrameConfig& cfg, const TFGrid& x_tf) {
    require_grid(cfg, x_tf.N(), x_tf.M(), "heisenberg_rect");
    CMatrix a = x_tf.values();
    transform_rows(a, Direction::inverse);
    return from_blocks(a);
}

TFGrid wigner_rect(const FrameConfig& cfg, const TimeSeries& r) {
    require_length(cfg, r.size(), "wigner_rect");
    CMatrix a = as_blocks(cfg, r);
    transform_rows(a, Direction::forward);
    return TFGrid(std::move(a));
}

DDGrid dzt_demod(const FrameConfig& cfg, const TimeSeries& y_td) {
    require_length(cfg, y_td.size(), "dzt_demod");
    CMatrix a = as_blocks(cfg, y_td);  // row n, column l holds y[l + nM]
    transform_cols(a, Direction::forward);
    return DDGrid(std::move(a));
}

TimeSeries dzt_mod(const FrameConfig& cfg, const DDGrid& x_dd) {
    require_grid(cfg, x_dd.N(), x_dd.M(), "dzt_mod");
    CMatrix a = x_dd.values();
    transform_cols(a, Direction::inverse);
    return from_blocks(a);
}

CMatrix fasttime_slowtime(const FrameConfig& cfg, const TimeSeries& y_td) {
    require_length(cfg, y_td.size(), "fasttime_slowtime");
    const auto M = static_cast<std::size_t>(cfg.M());
    const auto N = static_cast<std::size_t>(cfg.N());
    CMatrix r(M, N);
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t m = 0; m < M; ++m) r(m, n) = y_td[m + n * M];
    return r;
}

TimeSeries flatten_fasttime(const CMatrix& r) {
    TimeSeries y(r.rows() * r.cols());
    for (std::size_t n = 0; n < r.cols(); ++n)
        for (std::size_t m = 0; m < r.rows(); ++m) y[m + n * r.rows()] = r(m, n);
    return y;
}

TimeSeries modulate(const FrameConfig& cfg, const DDGrid& x_dd) {
    return heisenberg_rect(cfg, isfft(cfg, x_dd));
}

DDGrid demodulate(const FrameConfig& cfg, const TimeSeries& r) {
    return sfft(cfg, wigner_rect(cfg, r));
}

}  // namespace ddradar
