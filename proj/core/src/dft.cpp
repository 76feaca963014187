#include "ddradar/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ddradar {

namespace {

constexpr std::size_t kDirectLimit = 64;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

cplx unit_phase(double cycles) {
    const double a = 2.0 * std::numbers::pi * cycles;
    return {std::cos(a), std::sin(a)};
}

}  // namespace

DftPlan::DftPlan(std::size_t length) : n_(length) {
    if (length == 0) throw std::invalid_argument("DftPlan: zero length");

    if (is_pow2(n_)) {
        kind_ = Kind::radix2;
        twiddle_.resize(n_ / 2);
        for (std::size_t k = 0; k < n_ / 2; ++k)
            twiddle_[k] = unit_phase(-static_cast<double>(k) / static_cast<double>(n_));
        bitrev_.resize(n_);
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < n_) ++bits;
        for (std::size_t i = 0; i < n_; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < bits; ++b)
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
            bitrev_[i] = r;
        }
    } else if (n_ <= kDirectLimit) {
        kind_ = Kind::direct;
        twiddle_.resize(n_);
        for (std::size_t k = 0; k < n_; ++k)
            twiddle_[k] = unit_phase(-static_cast<double>(k) / static_cast<double>(n_));
    } else {
        kind_ = Kind::bluestein;
        // k^2 mod 2n keeps the chirp argument small and exact.
        chirp_.resize(n_);
        const std::size_t two_n = 2 * n_;
        for (std::size_t k = 0; k < n_; ++k) {
            const std::size_t k2 = (k * k) % two_n;
            chirp_[k] = unit_phase(-static_cast<double>(k2) / static_cast<double>(two_n));
        }
        const std::size_t padded = next_pow2(2 * n_ - 1);
        inner_ = std::make_unique<DftPlan>(padded);
        chirp_spectrum_.assign(padded, cplx{});
        chirp_spectrum_[0] = std::conj(chirp_[0]);
        for (std::size_t k = 1; k < n_; ++k) {
            chirp_spectrum_[k] = std::conj(chirp_[k]);
            chirp_spectrum_[padded - k] = std::conj(chirp_[k]);
        }
        inner_->unscaled(chirp_spectrum_, Direction::forward);
    }
}

DftPlan::~DftPlan() = default;
DftPlan::DftPlan(DftPlan&&) noexcept = default;
DftPlan& DftPlan::operator=(DftPlan&&) noexcept = default;

void DftPlan::unitary(std::span<cplx> data, Direction dir) const {
    unscaled(data, dir);
    const double s = 1.0 / std::sqrt(static_cast<double>(n_));
    for (auto& v : data) v *= s;
}

void DftPlan::unscaled(std::span<cplx> data, Direction dir) const {
    if (data.size() != n_) throw std::invalid_argument("DftPlan: length mismatch");
    switch (kind_) {
        case Kind::radix2: radix2(data, dir); break;
        case Kind::direct: direct(data, dir); break;
        case Kind::bluestein: bluestein(data, dir); break;
    }
}

void DftPlan::radix2(std::span<cplx> x, Direction dir) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (i < bitrev_[i]) std::swap(x[i], x[bitrev_[i]]);

    const bool inv = dir == Direction::inverse;
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t step = n_ / len;
        for (std::size_t i = 0; i < n_; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const cplx w = inv ? std::conj(twiddle_[j * step]) : twiddle_[j * step];
                const cplx u = x[i + j];
                const cplx v = x[i + j + half] * w;
                x[i + j] = u + v;
                x[i + j + half] = u - v;
            }
        }
    }
}

void DftPlan::direct(std::span<cplx> x, Direction dir) const {
    std::vector<cplx> out(n_);
    const bool inv = dir == Direction::inverse;
    for (std::size_t f = 0; f < n_; ++f) {
        cplx acc{};
        std::size_t idx = 0;
        for (std::size_t t = 0; t < n_; ++t) {
            const cplx w = inv ? std::conj(twiddle_[idx]) : twiddle_[idx];
            acc += x[t] * w;
            idx += f;
            if (idx >= n_) idx -= n_;
        }
        out[f] = acc;
    }
    std::copy(out.begin(), out.end(), x.begin());
}

void DftPlan::bluestein(std::span<cplx> x, Direction dir) const {
    // Inverse via conjugation: IDFT(x) = conj(DFT(conj(x))).
    const bool inv = dir == Direction::inverse;
    const std::size_t padded = inner_->length();
    std::vector<cplx> a(padded, cplx{});
    for (std::size_t k = 0; k < n_; ++k) a[k] = (inv ? std::conj(x[k]) : x[k]) * chirp_[k];
    inner_->unscaled(a, Direction::forward);
    for (std::size_t k = 0; k < padded; ++k) a[k] *= chirp_spectrum_[k];
    inner_->unscaled(a, Direction::inverse);
    const double s = 1.0 / static_cast<double>(padded);
    for (std::size_t k = 0; k < n_; ++k) {
        const cplx y = a[k] * s * chirp_[k];
        x[k] = inv ? std::conj(y) : y;
    }
}

std::vector<cplx> dft(std::span<const cplx> v, Direction dir) {
    if (v.empty()) throw std::invalid_argument("dft: empty input");
    std::vector<cplx> out(v.begin(), v.end());
    DftPlan(v.size()).unitary(out, dir);
    return out;
}

}  // namespace ddradar
