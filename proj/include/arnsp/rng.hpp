// SPDX-License-Identifier: Apache-2.0
//
// arnsp  adaptive/robust null-space-projection directional modulation simulator
// Copyright (C) 2026 the arnsp authors

#ifndef ARNSP_RNG_HPP
#define ARNSP_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace arnsp {

/// One step of the splitmix64 sequence; used only to mix seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream seed from (base, stream, index).
/// Used so that trial t of stream s draws the same values no matter
/// which sweep point is being evaluated (paired comparisons).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

/// Seeded generator with explicit Box-Muller transforms so that draws are
/// bit-identical across standard libraries (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in (0, 1]; safe as a log argument.
    double uniform_pos();
    /// Uniform in [-half_width, half_width).
    double uniform_pm(double half_width);
    /// Circularly-symmetric complex Gaussian, E|z|^2 = variance.
    std::complex<double> cgauss(double variance);
    /// Two independent fair bits packed into the low bits.
    std::uint32_t bit_pair();

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace arnsp

#endif
