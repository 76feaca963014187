#pragma once

#include <ostream>
#include <string>

#include "ddradar/harness.hpp"

namespace ddradar {

inline constexpr const char* kRmseCsvHeader =
    "snr_db,estimator_mode,P,rmse_range_m,rmse_velocity_mps,trials,resolution_range_m,"
    "resolution_velocity_mps,censored_trials,flagged";

/// `#` metadata lines (version, config hash, seed, SNR convention, censoring
/// policy) followed by the header and one row per RmseRow.
void write_rmse_csv(std::ostream& os, const ScenarioConfig& cfg, const RmseReport& report);

/// `#` header line, then one line per matrix row with each entry written as
/// two adjacent columns: real part, imaginary part.
void write_complex_matrix_csv(std::ostream& os, const CMatrix& m, const std::string& description);
void write_real_matrix_csv(std::ostream& os, const RMatrix& m, const std::string& description);

}  // namespace ddradar
