// SPDX-License-Identifier: Apache-2.0
//
// arnsp  adaptive/robust null-space-projection directional modulation simulator
// Copyright (C) 2026 the arnsp authors

#include "arnsp/rng.hpp"

#include <cmath>
#include <numbers>

namespace arnsp {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t s = base;
    splitmix64(s);
    s ^= stream * 0xD1342543DE82EF95ULL;
    splitmix64(s);
    s ^= index * 0xAF251AF3B0F025B5ULL;
    return splitmix64(s);
}

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() {
    return 1.0 - uniform();
}

double Rng::uniform_pm(double half_width) {
    return (2.0 * uniform() - 1.0) * half_width;
}

std::complex<double> Rng::cgauss(double variance) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-variance * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::uint32_t Rng::bit_pair() {
    return static_cast<std::uint32_t>(gen_() >> 62);
}

} // namespace arnsp
