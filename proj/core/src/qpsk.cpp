#include "ddradar/qpsk.hpp"

#include <cmath>
#include <stdexcept>

namespace ddradar {

std::vector<cplx> qpsk_map(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) throw std::invalid_argument("qpsk_map: odd number of bits");
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cplx> out(bits.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto b0 = bits[2 * i];
        const auto b1 = bits[2 * i + 1];
        if (b0 > 1 || b1 > 1) throw std::invalid_argument("qpsk_map: bits must be 0 or 1");
        out[i] = {b1 ? -a : a, b0 ? -a : a};
    }
    return out;
}

std::vector<std::uint8_t> random_bits(std::size_t count, Generator& gen) {
    std::vector<std::uint8_t> bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(gen.bit());
    return bits;
}

namespace {

CMatrix qpsk_matrix(int N, int M, Generator& gen) {
    const auto symbols = qpsk_map(random_bits(2 * static_cast<std::size_t>(N) * M, gen));
    CMatrix out(static_cast<std::size_t>(N), static_cast<std::size_t>(M));
    std::copy(symbols.begin(), symbols.end(), out.data().begin());
    return out;
}

}  // namespace

DDGrid random_qpsk_dd(int N, int M, Generator& gen) { return DDGrid(qpsk_matrix(N, M, gen)); }

TFGrid random_qpsk_tf(int N, int M, Generator& gen) { return TFGrid(qpsk_matrix(N, M, gen)); }

}  // namespace ddradar
