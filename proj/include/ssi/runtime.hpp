// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ssi/interface.hpp"

namespace ssi {

enum class Algo { ssi, pf };

/// Model memory: symbolic values carried across steps. Variables reachable
/// from these slots survive garbage collection.
using Memory = std::vector<Expr>;

class InferCtx;

/// Streaming step contract. `step` consumes one input record, updates the
/// memory in place, and returns the symbolic values whose marginals form the
/// step's posterior output. It must be deterministic given memory, input,
/// state, and RNG contents.
struct Model {
    std::string name;
    int num_outputs = 1;
    std::function<Memory()> init;
    std::function<std::vector<Expr>(Memory&, const std::vector<double>&,
                                    InferCtx&)>
        step;
};

/// Probabilistic operations available to a model step. Threads one
/// particle's state, weight, and RNG. Under Algo::pf every assume is
/// immediately sampled (the plain particle-filter semantics); under
/// Algo::ssi sampling is delayed symbolically.
class InferCtx {
  public:
    /// Introduces a random variable with distribution `d`; returns a
    /// symbolic handle (a constant under pf).
    Expr assume(const Dist& d);

    /// Forces a concrete sample of a symbolic value.
    double value(const Expr& v);

    /// Conditions on a freshly assumed variable with distribution `d`
    /// taking the concrete value `v`; accumulates the log-score.
    void observe(const Dist& d, double v);

    Algo algo() const { return algo_; }
    RandomSource& rng() { return *rng_; }

  private:
    friend class InferState;
    InferCtx(SymbolicState* state, double* log_weight, RandomSource* rng,
             Algo algo, Trace* trace)
        : state_(state), log_weight_(log_weight), rng_(rng), algo_(algo),
          trace_(trace) {}
    SymbolicState* state_;
    double* log_weight_;
    RandomSource* rng_;
    Algo algo_;
    Trace* trace_;
};

/// One independent weighted execution of the model.
struct Particle {
    Memory memory;
    SymbolicState state;
    double log_weight = 0.0;
    RandomSource rng{0};
};

struct MixtureComponent {
    double weight = 0.0;  // normalized, linear scale
    ClosedDist dist = ClosedDist::delta(0.0);
};

/// Posterior summary for one step: per output, the weighted mixture of
/// particle marginals, plus diagnostics.
struct StepOutput {
    std::vector<std::vector<MixtureComponent>> outputs;  // [output][particle]
    double ess = 0.0;
    std::uint64_t draws = 0;  // forced samplings during this step

    double mixture_mean(int output) const;
    double mixture_variance(int output) const;
};

class InferState {
  public:
    InferState(Model model, int particles, std::uint64_t seed, Algo algo,
               Trace* trace = nullptr);

    /// Runs one input through every particle, extracts the weighted output
    /// mixture, then resamples and garbage-collects.
    StepOutput step(const std::vector<double>& input);

    const std::vector<Particle>& particles() const { return particles_; }
    std::uint64_t total_draws() const { return total_draws_; }

  private:
    Model model_;
    Algo algo_;
    std::vector<Particle> particles_;
    RandomSource resample_rng_;
    std::uint64_t total_draws_ = 0;
    Trace* trace_;
};

InferState infer_init(const Model& model, int particles, std::uint64_t seed,
                      Algo algo, Trace* trace = nullptr);

StepOutput infer_step(InferState& s, const std::vector<double>& input);

std::vector<StepOutput> run_stream(const Model& model,
                                   std::span<const std::vector<double>> inputs,
                                   int particles, std::uint64_t seed, Algo algo,
                                   Trace* trace = nullptr);

}  // namespace ssi
