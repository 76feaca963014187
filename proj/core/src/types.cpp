#include "ddradar/types.hpp"

namespace ddradar {

std::string to_string(Modulation mod) {
    switch (mod) {
        case Modulation::qpsk: return "qpsk";
    }
    return "unknown";
}

Modulation modulation_from_string(const std::string& name) {
    if (name == "qpsk" || name == "QPSK") return Modulation::qpsk;
    throw std::invalid_argument("unsupported modulation '" + name + "'");
}

FrameConfig::FrameConfig(int M, int N, double delta_f_hz, double carrier_hz, Modulation mod)
    : M_(M), N_(N), delta_f_(delta_f_hz), f_c_(carrier_hz), mod_(mod) {
    if (M < 2 || N < 2) throw std::invalid_argument("FrameConfig: M and N must be >= 2");
    if (!(delta_f_hz > 0.0)) throw std::invalid_argument("FrameConfig: delta_f must be positive");
    if (!(carrier_hz > 0.0)) throw std::invalid_argument("FrameConfig: carrier frequency must be positive");
}

FrameConfig FrameConfig::grid(int M, int N) { return FrameConfig(M, N, 39e3, 24e9); }

double FrameConfig::range_resolution() const { return kSpeedOfLight / (2.0 * M_ * delta_f_); }

double FrameConfig::velocity_resolution() const {
    return kSpeedOfLight / (2.0 * f_c_ * frame_duration());
}

}  // namespace ddradar
