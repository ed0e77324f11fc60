// Copyright 2026 The wernerlhv developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Seeded random streams for the Monte Carlo kernels.
 *
 * The generator is xoshiro256++ (Blackman & Vigna), a named 64-bit
 * generator with a published reference implementation, states derived
 * per (seed, stream) through the SplitMix64 finalizer. All integer
 * arithmetic is exact, so a given (seed, stream) produces the same
 * sequence on every platform; variates built on top of it involve libm
 * (log, sqrt) and are bit-stable per platform/build.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace wernerlhv {

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood).
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// One independent random stream. Streams with distinct (seed, stream)
/// pairs are statistically independent for all practical purposes.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        // Expand (seed, stream) into the 256-bit xoshiro state via a
        // SplitMix64 walk; guarantees a nonzero state.
        std::uint64_t x = detail::splitmix64_mix(seed ^ detail::splitmix64_mix(stream));
        for (auto& w : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            w = detail::splitmix64_mix(x);
        }
    }

    /// xoshiro256++ next().
    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random mantissa bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unit-rate exponential.
    double exponential() { return -std::log1p(-uniform()); }

    /// Standard complex Gaussian (independent N(0, 1/2)-ish real and
    /// imaginary parts scaled so both marginals are N(0,1)); Marsaglia
    /// polar method, no trigonometry.
    std::complex<double> gaussian_pair() {
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        return {u * m, v * m};
    }

    /// Real standard Gaussian (one of the polar pair; the other is drawn
    /// fresh next call, keeping every call's consumption self-contained).
    double gaussian() { return gaussian_pair().real(); }

  private:
    std::uint64_t state_[4];
};

} // namespace wernerlhv
