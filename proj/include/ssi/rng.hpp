// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace ssi {

/// Splittable counter-based pseudo-random source. Each particle owns exactly
/// one stream; streams for distinct (seed, index) pairs are statistically
/// independent. The generator is a SplitMix64 walk, so replaying a seed
/// replays the exact draw sequence.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    /// Stream for logical index `index` under run seed `seed`.
    static RandomSource child(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform on (0, 1), never exactly 0 or 1.
    double uniform();

    /// Standard normal via Box-Muller.
    double gaussian();

    /// Gamma(shape, 1) via Marsaglia-Tsang squeeze.
    double gamma(double shape);

    double beta(double alpha, double beta);

    bool operator==(const RandomSource&) const = default;

  private:
    std::uint64_t state_;
};

/// Stateless 64-bit mixer used for seed derivation.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

}  // namespace ssi
