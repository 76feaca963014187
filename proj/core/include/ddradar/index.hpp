#pragma once

namespace ddradar {

/// Maps a Doppler row in [0, N) to the signed index in
/// [ceil(-N/2), ceil(N/2) - 1]. Out-of-range rows are wrapped first.
int signed_doppler(int k_row, int N);

/// Inverse of signed_doppler: any integer back to its row in [0, N).
int doppler_row(int k_signed, int N);

/// Wraps a real-valued index difference into [-period/2, period/2).
double wrap_difference(double d, double period);

}  // namespace ddradar
