// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/runtime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssi/error.hpp"

namespace ssi {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::uint64_t kResampleStream = 0xfffffffffffffffeULL;
}  // namespace

Expr InferCtx::assume(const Dist& d) {
    if (algo_ == Algo::pf) {
        // Eager sampling: the plain particle-filter semantics.
        double v = draw(close(d, *state_), *rng_);
        state_->count_draw();
        return Expr::real(v);
    }
    return Expr::var(state_->assume(d));
}

double InferCtx::value(const Expr& v) {
    Expr folded = eval(v, *state_);
    if (folded.is_const()) return folded.const_value();
    if (folded.is_var()) {
        return ssi::value(folded.var_id(), *state_, *rng_, trace_);
    }
    throw UnsupportedError("value of composite expression " + to_string(v));
}

void InferCtx::observe(const Dist& d, double v) {
    if (algo_ == Algo::pf) {
        *log_weight_ += score(close(d, *state_), v);
        return;
    }
    RvId x = state_->assume(d);
    *log_weight_ += ssi::observe(x, v, *state_, *rng_, trace_);
}

double StepOutput::mixture_mean(int output) const {
    double m = 0.0;
    for (const MixtureComponent& c : outputs[output]) {
        m += c.weight * c.dist.mean();
    }
    return m;
}

double StepOutput::mixture_variance(int output) const {
    double m = mixture_mean(output);
    double second = 0.0;
    for (const MixtureComponent& c : outputs[output]) {
        double cm = c.dist.mean();
        second += c.weight * (c.dist.variance() + cm * cm);
    }
    return second - m * m;
}

InferState::InferState(Model model, int particles, std::uint64_t seed,
                       Algo algo, Trace* trace)
    : model_(std::move(model)), algo_(algo),
      resample_rng_(RandomSource::child(seed, kResampleStream)),
      trace_(trace) {
    if (particles < 1) {
        throw InvalidParticleCountError("particle count must be >= 1");
    }
    particles_.reserve(particles);
    for (int i = 0; i < particles; ++i) {
        Particle p;
        p.memory = model_.init();
        p.rng = RandomSource::child(seed, static_cast<std::uint64_t>(i));
        particles_.push_back(std::move(p));
    }
}

StepOutput InferState::step(const std::vector<double>& input) {
    const int n = static_cast<int>(particles_.size());

    // Each particle starts the step at weight 1.
    std::uint64_t draws_before = 0;
    for (Particle& p : particles_) {
        p.log_weight = 0.0;
        draws_before += p.state.draw_count();
    }

    std::vector<std::vector<Expr>> values(n);
    for (int i = 0; i < n; ++i) {
        Particle& p = particles_[i];
        InferCtx ctx(&p.state, &p.log_weight, &p.rng, algo_, trace_);
        values[i] = model_.step(p.memory, input, ctx);
    }

    // Normalize by log-sum-exp.
    double max_lw = kNegInf;
    for (const Particle& p : particles_) max_lw = std::max(max_lw, p.log_weight);
    if (max_lw == kNegInf) {
        throw AllParticlesDeadError("all particle weights are zero");
    }
    double sum = 0.0;
    for (const Particle& p : particles_) sum += std::exp(p.log_weight - max_lw);
    double log_norm = max_lw + std::log(sum);

    std::vector<double> weights(n);
    double ess_denom = 0.0;
    for (int i = 0; i < n; ++i) {
        particles_[i].log_weight -= log_norm;
        weights[i] = std::exp(particles_[i].log_weight);
        ess_denom += weights[i] * weights[i];
    }

    // Output is extracted from the pre-resampling weighted particles.
    StepOutput out;
    out.outputs.resize(model_.num_outputs);
    for (int j = 0; j < model_.num_outputs; ++j) {
        out.outputs[j].reserve(n);
        for (int i = 0; i < n; ++i) {
            Particle& p = particles_[i];
            out.outputs[j].push_back(MixtureComponent{
                weights[i], marginal_of(values[i][j], p.state, p.rng, trace_)});
        }
    }
    out.ess = 1.0 / ess_denom;

    std::uint64_t draws_after = 0;
    for (const Particle& p : particles_) draws_after += p.state.draw_count();
    out.draws = draws_after - draws_before;
    total_draws_ += out.draws;

    // Systematic resampling from the normalized weights.
    std::vector<int> picks(n);
    double u = resample_rng_.uniform() / n;
    double cum = weights[0];
    int idx = 0;
    for (int k = 0; k < n; ++k) {
        double target = u + static_cast<double>(k) / n;
        while (cum < target && idx + 1 < n) cum += weights[++idx];
        picks[k] = idx;
    }

    std::vector<Particle> next;
    next.reserve(n);
    for (int k = 0; k < n; ++k) {
        const Particle& src = particles_[picks[k]];
        Particle p;
        p.memory = src.memory;
        p.state = src.state;  // deep copy
        p.log_weight = 0.0;
        // RNG streams stay bound to the slot, never to the lineage, so
        // duplicated particles diverge immediately.
        p.rng = particles_[k].rng;
        next.push_back(std::move(p));
    }
    particles_ = std::move(next);

    for (Particle& p : particles_) {
        std::set<RvId> live;
        for (const Expr& slot : p.memory) {
            for (RvId x : free_rvs(slot)) live.insert(x);
        }
        p.state.gc(live);
    }
    return out;
}

InferState infer_init(const Model& model, int particles, std::uint64_t seed,
                      Algo algo, Trace* trace) {
    return InferState(model, particles, seed, algo, trace);
}

StepOutput infer_step(InferState& s, const std::vector<double>& input) {
    return s.step(input);
}

std::vector<StepOutput> run_stream(const Model& model,
                                   std::span<const std::vector<double>> inputs,
                                   int particles, std::uint64_t seed, Algo algo,
                                   Trace* trace) {
    InferState s(model, particles, seed, algo, trace);
    std::vector<StepOutput> out;
    out.reserve(inputs.size());
    for (const auto& input : inputs) out.push_back(s.step(input));
    return out;
}

}  // namespace ssi
