#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ddradar/rng.hpp"
#include "ddradar/types.hpp"

namespace ddradar {

/// Gray-mapped unit-power QPSK. Bit pairs (b0, b1) map to
/// ((b1 ? -1 : 1) + j (b0 ? -1 : 1)) / sqrt(2):
/// 00 -> (1+j), 01 -> (-1+j), 11 -> (-1-j), 10 -> (1-j).
std::vector<cplx> qpsk_map(std::span<const std::uint8_t> bits);

std::vector<std::uint8_t> random_bits(std::size_t count, Generator& gen);

/// N x M grid of random QPSK symbols (2MN random bits).
DDGrid random_qpsk_dd(int N, int M, Generator& gen);
TFGrid random_qpsk_tf(int N, int M, Generator& gen);

}  // namespace ddradar
