#pragma once

#include "stratakit/rational.hpp"

#include <cstdint>
#include <random>

namespace stratakit {

/// splitmix64 finaliser; derives independent per-stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) { return Rng(mix_seed(seed, stream)); }

/// Uniform in [0, 1), built from raw 53-bit draws so it is identical across standard libraries.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Standard normal via Box-Muller on uniform01.
double standard_normal(Rng& rng);

/// a / b in [-1, 1] with b in [1, max_den] and |a| <= b.
Rational small_rational(Rng& rng, long max_den = 97);

/// Combination of the basis of `space` with small_rational coefficients, each basis
/// vector first scaled to unit max-norm so draws stay of order one.
QVector random_in(const Subspace& space, Rng& rng);

/// Nearest rational with denominator 2^bits.
Rational dyadic(double x, int bits = 12);

/// Point uniform in the unit ball of R^d (floating).
std::vector<double> uniform_ball(Rng& rng, std::size_t d);

} // namespace stratakit
