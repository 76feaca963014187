#pragma once

#include <cstdint>
#include <random>

#include "ddradar/types.hpp"

namespace ddradar {

class Generator;

/// Immutable key for a reproducible random stream.
///
/// The engine state is a pure function of (seed, stream_id), so per-trial
/// streams give identical draws whatever order or thread they run on.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Independent sub-stream, e.g. one per random quantity within a trial.
    RngStream child(std::uint64_t tag) const;

    Generator generator() const;

    bool operator==(const RngStream&) const = default;

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

/// Mutable draw state created from an RngStream. Not thread-safe; each
/// worker owns its own.
class Generator {
public:
    explicit Generator(std::uint64_t key) : engine_(key) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    int bit() { return static_cast<int>(engine_() >> 63); }
    double normal();
    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    cplx complex_normal(double variance);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace ddradar
