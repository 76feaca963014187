#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "ddradar/rng.hpp"
#include "ddradar/types.hpp"

namespace testutil {

using ddradar::cplx;

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) return INFINITY;
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

template <class D>
double max_abs_diff(const ddradar::Grid<D>& a, const ddradar::Grid<D>& b) {
    return max_abs_diff(a.values().data(), b.values().data());
}

inline double max_abs_diff(const ddradar::TimeSeries& a, const ddradar::TimeSeries& b) {
    return max_abs_diff(a.samples(), b.samples());
}

inline std::vector<cplx> random_vector(std::size_t n, ddradar::Generator& gen) {
    std::vector<cplx> v(n);
    for (auto& x : v) x = gen.complex_normal(1.0);
    return v;
}

template <class G>
G random_grid(int N, int M, ddradar::Generator& gen) {
    G g(N, M);
    for (auto& x : g.values().data()) x = gen.complex_normal(1.0);
    return g;
}

inline ddradar::Generator gen(std::uint64_t seed, std::uint64_t stream = 0) {
    return ddradar::RngStream(seed, stream).generator();
}

inline double energy(std::span<const cplx> v) {
    double e = 0.0;
    for (const auto& x : v) e += std::norm(x);
    return e;
}

}  // namespace testutil
