#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ddradar/types.hpp"

namespace ddradar {

enum class Direction { forward, inverse };

/// Precomputed discrete Fourier transform of one length.
///
/// Forward uses exp(-j 2 pi f t / L), inverse exp(+j 2 pi f t / L). The
/// unitary entry points scale both directions by 1/sqrt(L). Power-of-two
/// lengths use an iterative radix-2 kernel, short odd lengths a direct
/// O(L^2) sum and everything else Bluestein's chirp-z algorithm.
///
/// A plan is immutable after construction and may be shared across threads.
class DftPlan {
public:
    explicit DftPlan(std::size_t length);
    ~DftPlan();
    DftPlan(DftPlan&&) noexcept;
    DftPlan& operator=(DftPlan&&) noexcept;

    std::size_t length() const { return n_; }

    void unitary(std::span<cplx> data, Direction dir) const;
    void unscaled(std::span<cplx> data, Direction dir) const;

private:
    enum class Kind { radix2, direct, bluestein };

    void radix2(std::span<cplx> data, Direction dir) const;
    void direct(std::span<cplx> data, Direction dir) const;
    void bluestein(std::span<cplx> data, Direction dir) const;

    std::size_t n_;
    Kind kind_;
    std::vector<cplx> twiddle_;           // exp(-j 2 pi k / n), k < n (direct) or n/2 (radix2)
    std::vector<std::size_t> bitrev_;
    std::vector<cplx> chirp_;             // exp(-j pi k^2 / n)
    std::vector<cplx> chirp_spectrum_;    // FFT of the conjugate chirp filter
    std::unique_ptr<DftPlan> inner_;
};

/// Unitary DFT of a nonempty vector.
std::vector<cplx> dft(std::span<const cplx> v, Direction dir = Direction::forward);

}  // namespace ddradar
