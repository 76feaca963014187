#include "ddradar/index.hpp"

#include <cmath>
#include <stdexcept>

#include "ddradar/types.hpp"

namespace ddradar {

int signed_doppler(int k_row, int N) {
    if (N <= 0) throw std::invalid_argument("signed_doppler: N must be positive");
    const int k = static_cast<int>(wrap_index(k_row, N));
    const int lowest = -(N / 2);  // ceil(-N/2)
    return k >= N + lowest ? k - N : k;
}

int doppler_row(int k_signed, int N) {
    if (N <= 0) throw std::invalid_argument("doppler_row: N must be positive");
    return static_cast<int>(wrap_index(k_signed, N));
}

double wrap_difference(double d, double period) {
    double r = std::fmod(d + 0.5 * period, period);
    if (r < 0.0) r += period;
    return r - 0.5 * period;
}

}  // namespace ddradar
