#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddradar {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

enum class Modulation { qpsk };

std::string to_string(Modulation mod);
Modulation modulation_from_string(const std::string& name);

/// OTFS frame geometry and RF parameters.
///
/// N time slots (Doppler bins) by M subcarriers (delay bins). The symbol
/// duration is always 1/delta_f; it is derived and never stored.
class FrameConfig {
public:
    FrameConfig(int M, int N, double delta_f_hz, double carrier_hz,
                Modulation mod = Modulation::qpsk);

    /// Grid-only config with the 24 GHz / 39 kHz RF defaults.
    static FrameConfig grid(int M, int N);

    int M() const { return M_; }
    int N() const { return N_; }
    std::size_t frame_size() const { return static_cast<std::size_t>(M_) * N_; }

    double delta_f() const { return delta_f_; }
    double T() const { return 1.0 / delta_f_; }
    double f_c() const { return f_c_; }
    Modulation modulation() const { return mod_; }

    double frame_duration() const { return N_ * T(); }
    double bandwidth() const { return M_ * delta_f_; }
    double sample_rate() const { return bandwidth(); }

    /// One delay bin in metres, c / (2 M delta_f).
    double range_resolution() const;
    /// One Doppler bin in m/s, c / (2 f_c N T).
    double velocity_resolution() const;

    bool operator==(const FrameConfig&) const = default;

private:
    int M_;
    int N_;
    double delta_f_;
    double f_c_;
    Modulation mod_;
};

inline long wrap_index(long i, long n) {
    long r = i % n;
    return r < 0 ? r + n : r;
}

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T& at(std::size_t r, std::size_t c) {
        check(r, c);
        return (*this)(r, c);
    }
    const T& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return (*this)(r, c);
    }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<T> data() { return data_; }
    std::span<const T> data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using CMatrix = Matrix<cplx>;
using RMatrix = Matrix<double>;

namespace tag {
struct DelayDoppler;
struct TimeFrequency;
struct Correlation;
}  // namespace tag

/// Complex N x M grid: rows are the slow axis (Doppler index k or time slot
/// n), columns the fast axis (delay index l or subcarrier m). Element access
/// through operator() wraps modulo N and M.
template <class Domain>
class Grid {
public:
    Grid() = default;
    Grid(int N, int M) : values_(checked(N), checked(M)) {}
    explicit Grid(CMatrix values) : values_(std::move(values)) {
        if (values_.rows() == 0 || values_.cols() == 0) throw std::invalid_argument("Grid: empty matrix");
    }

    int N() const { return static_cast<int>(values_.rows()); }
    int M() const { return static_cast<int>(values_.cols()); }

    cplx& operator()(long k, long l) {
        return values_(static_cast<std::size_t>(wrap_index(k, N())),
                       static_cast<std::size_t>(wrap_index(l, M())));
    }
    const cplx& operator()(long k, long l) const {
        return values_(static_cast<std::size_t>(wrap_index(k, N())),
                       static_cast<std::size_t>(wrap_index(l, M())));
    }

    CMatrix& values() { return values_; }
    const CMatrix& values() const { return values_; }

    bool matches(const FrameConfig& cfg) const { return N() == cfg.N() && M() == cfg.M(); }

    double energy() const {
        double e = 0.0;
        for (const auto& v : values_.data()) e += std::norm(v);
        return e;
    }

private:
    static std::size_t checked(int n) {
        if (n <= 0) throw std::invalid_argument("Grid: dimensions must be positive");
        return static_cast<std::size_t>(n);
    }

    CMatrix values_;
};

using DDGrid = Grid<tag::DelayDoppler>;
using TFGrid = Grid<tag::TimeFrequency>;
/// 2D correlation output V[k, l]; k is the Doppler lag row, l the delay lag.
using CorrelationMap = Grid<tag::Correlation>;

/// Time-domain samples at rate M * delta_f.
class TimeSeries {
public:
    TimeSeries() = default;
    explicit TimeSeries(std::size_t n) : samples_(n) {}
    explicit TimeSeries(std::vector<cplx> samples) : samples_(std::move(samples)) {}

    std::size_t size() const { return samples_.size(); }
    cplx& operator[](std::size_t i) { return samples_[i]; }
    const cplx& operator[](std::size_t i) const { return samples_[i]; }

    std::span<cplx> samples() { return samples_; }
    std::span<const cplx> samples() const { return samples_; }
    std::vector<cplx>& vec() { return samples_; }
    const std::vector<cplx>& vec() const { return samples_; }

    double energy() const {
        double e = 0.0;
        for (const auto& v : samples_) e += std::norm(v);
        return e;
    }

private:
    std::vector<cplx> samples_;
};

}  // namespace ddradar
