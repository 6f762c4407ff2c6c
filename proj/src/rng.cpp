// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/rng.hpp"

#include <cmath>

namespace ssi {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a + kGolden + (b << 6) + (b >> 2) + mix64(b));
}

RandomSource RandomSource::child(std::uint64_t seed, std::uint64_t index) {
    return RandomSource(hash_combine(seed, index));
}

std::uint64_t RandomSource::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RandomSource::uniform() {
    // 53 mantissa bits, shifted into (0, 1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomSource::gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double RandomSource::gamma(double shape) {
    if (shape < 1.0) {
        // Boost to shape+1 and scale back.
        double u = uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = gaussian();
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = uniform();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
            return d * v;
        }
    }
}

double RandomSource::beta(double alpha, double beta) {
    double a = gamma(alpha);
    double b = gamma(beta);
    return a / (a + b);
}

}  // namespace ssi
