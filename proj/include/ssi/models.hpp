// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ssi/runtime.hpp"

namespace ssi::models {

/// Synthetic stream: one input record per step plus the ground-truth latent
/// values the per-step squared error is measured against.
struct GeneratedData {
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> truths;  // [step][output]
};

/// A benchmark: model factory, named constants, and a seeded data generator
/// (the data seed is independent of the inference seed).
struct BenchmarkSpec {
    std::string name;
    int num_outputs = 1;
    std::map<std::string, double> constants;
    std::function<Model()> make_model;
    std::function<GeneratedData(std::uint64_t data_seed, int steps)> generate;
};

/// Coin bias with a Beta(1, 1) prior; observes one flip per step.
Model beta_bernoulli();

/// Scalar latent random walk with Gaussian observations.
/// x_0 ~ N(m0, p0), x_t ~ N(x_{t-1}, q), y_t ~ N(x_t, r).
Model kalman_1d();

/// Static mean and standard deviation, both with Gaussian priors; the
/// sigma^2 observation variance is non-conjugate and forces a sampling
/// fallback on the first observation.
Model gaussian_gaussian();

/// Kalman-1D latent where each observation is an outlier with probability
/// 0.1; the branch is explicitly sampled, so the Gaussian sub-state stays
/// exact.
Model outlier();

/// Outlier variant with a configurable branch probability (0 degenerates to
/// the plain Kalman model).
Model outlier_model(double outlier_prob);

/// Fresh three-level Gaussian binary tree each step (root, two children,
/// four leaves); observes the leftmost then the rightmost leaf and reports
/// the root.
Model tree();

/// Two-wheel robot velocity model: angular and forward velocity random
/// walks observed through both wheel rates.
Model wheels();

/// Registry of all benchmarks, keyed by CLI name.
const std::vector<BenchmarkSpec>& benchmarks();

/// Lookup by name; throws UnknownModelError.
const BenchmarkSpec& benchmark(const std::string& name);

/// Per-step loss: mean over outputs of (mixture mean - truth)^2.
double squared_error(const StepOutput& out, const std::vector<double>& truth);

}  // namespace ssi::models
