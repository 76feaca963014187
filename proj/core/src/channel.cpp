#include "ddradar/channel.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ddradar/dft.hpp"
#include "ddradar/modem.hpp"

namespace ddradar {

namespace {

int nearest(double x) { return static_cast<int>(std::lround(x)); }

cplx unit_phase(double cycles) {
    const double a = 2.0 * std::numbers::pi * cycles;
    return {std::cos(a), std::sin(a)};
}

bool is_integer(double x) { return x == std::floor(x); }

}  // namespace

int Target::delay_bin() const { return nearest(l_tau); }
int Target::doppler_bin() const { return nearest(k_nu); }

DDIndices physical_to_indices(double range_m, double velocity_mps, const FrameConfig& cfg) {
    if (!(range_m >= 0.0)) throw std::domain_error("physical_to_indices: range must be >= 0");
    const double l_tau = 2.0 * range_m / kSpeedOfLight * cfg.bandwidth();
    const double k_nu = 2.0 * cfg.f_c() * velocity_mps / kSpeedOfLight * cfg.frame_duration();
    if (l_tau >= cfg.M()) {
        std::ostringstream os;
        os << "physical_to_indices: range " << range_m << " m maps to delay index " << l_tau
           << " which exceeds the frame (M = " << cfg.M() << ", max range "
           << cfg.M() * cfg.range_resolution() << " m)";
        throw std::domain_error(os.str());
    }
    if (std::abs(k_nu) >= 0.5 * cfg.N()) {
        const double vmax = max_unambiguous_velocity(cfg);
        std::ostringstream os;
        os << "physical_to_indices: velocity " << velocity_mps << " m/s (" << velocity_mps * 3.6
           << " km/h) maps to Doppler index " << k_nu << "; the unambiguous design bound is |k_nu| < N/2 = "
           << 0.5 * cfg.N() << ", i.e. |V| < " << vmax << " m/s (" << vmax * 3.6 << " km/h)";
        throw std::domain_error(os.str());
    }
    return {l_tau, k_nu};
}

PhysicalState indices_to_physical(double l_tau, double k_nu, const FrameConfig& cfg) {
    return {kSpeedOfLight * l_tau / (2.0 * cfg.bandwidth()),
            kSpeedOfLight * k_nu / (2.0 * cfg.f_c() * cfg.frame_duration())};
}

double max_unambiguous_velocity(const FrameConfig& cfg) {
    return 0.5 * cfg.N() * cfg.velocity_resolution();
}

ChannelSpec::ChannelSpec(FrameConfig cfg, std::vector<Target> targets, SharedDelayPolicy policy)
    : cfg_(cfg), targets_(std::move(targets)) {
    if (targets_.empty()) throw std::invalid_argument("ChannelSpec: at least one target required");
    std::set<long> delay_bins;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        const auto& t = targets_[i];
        const std::string who = "ChannelSpec: target " + std::to_string(i);
        if (!(std::abs(t.gain) > 0.0) || !std::isfinite(std::abs(t.gain)))
            throw std::invalid_argument(who + " has zero or non-finite gain");
        if (!(t.l_tau >= 0.0 && t.l_tau < cfg_.M()))
            throw std::invalid_argument(who + " delay index outside [0, M)");
        if (!(t.k_nu >= -0.5 * cfg_.N() && t.k_nu < 0.5 * cfg_.N()))
            throw std::invalid_argument(who + " Doppler index outside [-N/2, N/2)");
        const long bin = wrap_index(t.delay_bin(), cfg_.M());
        if (!delay_bins.insert(bin).second) {
            const std::string msg = "targets share integer delay bin " + std::to_string(bin);
            if (policy == SharedDelayPolicy::reject) throw std::invalid_argument("ChannelSpec: " + msg);
            if (warning_.empty()) warning_ = msg + "; fractional refinement accuracy is not guaranteed";
        }
    }
}

NoiseSpec NoiseSpec::from_snr_db(double snr_db) { return {std::pow(10.0, -snr_db / 10.0)}; }

double NoiseSpec::snr_db() const {
    if (sigma2 == 0.0) return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(sigma2);
}

std::vector<cplx> apply_channel_samples(std::span<const cplx> s, const ChannelSpec& spec) {
    const std::size_t L = s.size();
    if (L == 0) throw std::invalid_argument("apply_channel: empty signal");
    const double frame = static_cast<double>(spec.config().frame_size());

    std::vector<cplx> out(L, cplx{});
    std::vector<cplx> spectrum;
    std::unique_ptr<DftPlan> plan;
    std::vector<cplx> shifted(L);

    for (const auto& t : spec.targets()) {
        if (is_integer(t.l_tau)) {
            const long d = static_cast<long>(t.l_tau);
            for (std::size_t q = 0; q < L; ++q)
                shifted[q] = s[static_cast<std::size_t>(wrap_index(static_cast<long>(q) - d, static_cast<long>(L)))];
        } else {
            if (!plan) {
                plan = std::make_unique<DftPlan>(L);
                spectrum.assign(s.begin(), s.end());
                plan->unscaled(spectrum, Direction::forward);
            }
            const long lowest = -static_cast<long>(L / 2);
            for (std::size_t f = 0; f < L; ++f) {
                long sf = static_cast<long>(f);
                if (sf >= static_cast<long>(L) + lowest) sf -= static_cast<long>(L);
                shifted[f] = spectrum[f] * unit_phase(-static_cast<double>(sf) * t.l_tau / static_cast<double>(L));
            }
            plan->unscaled(shifted, Direction::inverse);
            const double scale = 1.0 / static_cast<double>(L);
            for (auto& v : shifted) v *= scale;
        }
        for (std::size_t q = 0; q < L; ++q)
            out[q] += t.gain * unit_phase(t.k_nu * (static_cast<double>(q) - t.l_tau) / frame) * shifted[q];
    }
    return out;
}

TimeSeries apply_channel(const TimeSeries& s, const ChannelSpec& spec) {
    if (s.size() != spec.config().frame_size())
        throw std::invalid_argument("apply_channel: signal length does not match the frame");
    return TimeSeries(apply_channel_samples(s.samples(), spec));
}

TimeSeries add_awgn(const TimeSeries& r, const NoiseSpec& noise, RngStream rng) {
    if (!(noise.sigma2 >= 0.0)) throw std::invalid_argument("add_awgn: sigma2 must be >= 0");
    TimeSeries out = r;
    if (noise.sigma2 == 0.0) return out;
    auto gen = rng.generator();
    for (auto& v : out.samples()) v += gen.complex_normal(noise.sigma2);
    return out;
}

DDGrid effective_dd_channel(const ChannelSpec& spec) {
    const auto& cfg = spec.config();
    DDGrid impulse(cfg.N(), cfg.M());
    impulse(0, 0) = 1.0;
    return demodulate(cfg, apply_channel(modulate(cfg, impulse), spec));
}

}  // namespace ddradar
