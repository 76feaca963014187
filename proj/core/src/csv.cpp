#include "ddradar/csv.hpp"

#include <algorithm>
#include <cstdio>

#include "ddradar/scenario_io.hpp"

namespace ddradar {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_rmse_csv(std::ostream& os, const ScenarioConfig& cfg, const RmseReport& report) {
    os << "# ddradar " << version() << " rmse_sweep\n";
    os << "# config_hash: fnv1a64:" << config_hash_hex(cfg) << "\n";
    os << "# seed: " << cfg.master_seed << "\n";
    os << "# frame: M=" << cfg.frame.M() << " N=" << cfg.frame.N() << " delta_f_hz=" << num(cfg.frame.delta_f())
       << " carrier_hz=" << num(cfg.frame.f_c()) << "\n";
    os << "# snr: 10*log10(1/sigma2), unit-energy QPSK symbols, sigma2 per complex time sample\n";
    os << "# rmse: sqrt(mean squared matched error over uncensored trials x P targets)\n";
    os << "# censoring: a trial is censored when peak picking finds fewer than P maxima or a refinement"
          " is undefined; censored trials are excluded from rmse, counted in censored_trials, and the row"
          " is flagged when more than "
       << static_cast<int>(kCensorFlagFraction * 100) << "% of trials are censored\n";
    const bool ofdm = std::find(cfg.modes.begin(), cfg.modes.end(), EstimatorMode::ofdm_baseline) != cfg.modes.end();
    if (ofdm)
        os << "# ofdm: reconstruction defaults cp_len=" << cfg.cp_len() << " (auto = ceil(max delay)+1) zero_pad="
           << cfg.ofdm.zero_pad << "\n";
    os << kRmseCsvHeader << "\n";
    for (const auto& r : report.rows) {
        os << num(r.snr_db) << ',' << to_string(r.mode) << ',' << r.P << ',' << num(r.rmse_range_m) << ','
           << num(r.rmse_velocity_mps) << ',' << r.trials << ',' << num(r.resolution_range_m) << ','
           << num(r.resolution_velocity_mps) << ',' << r.censored_trials << ',' << (r.flagged ? 1 : 0) << "\n";
    }
}

void write_complex_matrix_csv(std::ostream& os, const CMatrix& m, const std::string& description) {
    os << "# " << description << "; " << m.rows() << " rows x " << m.cols()
       << " complex columns, each written as re,im\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << num(m(r, c).real()) << ',' << num(m(r, c).imag());
        }
        os << "\n";
    }
}

void write_real_matrix_csv(std::ostream& os, const RMatrix& m, const std::string& description) {
    os << "# " << description << "; " << m.rows() << " rows x " << m.cols() << " columns\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << num(m(r, c));
        }
        os << "\n";
    }
}

}  // namespace ddradar
