// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/models.hpp"

#include <cmath>

#include "ssi/error.hpp"

namespace ssi::models {

namespace {

Expr rc(double v) { return Expr::real(v); }

// Kalman-1D constants.
constexpr double kKalmanM0 = 0.0;
constexpr double kKalmanP0 = 100.0;
constexpr double kKalmanQ = 1.0;
constexpr double kKalmanR = 1.0;

// Wheels constants.
constexpr double kOmegaVar = 2500.0;
constexpr double kVelVar = 2500.0;
constexpr double kWheelBase = 2.0;
constexpr double kSensorErr = 1.0;

// Tree constants.
constexpr double kTreeRootVar = 10.0;
constexpr double kTreeChildVar = 5.0;
constexpr double kTreeLeafVar = 1.0;

// Outlier constants.
constexpr double kOutlierProb = 0.1;
constexpr double kOutlierRGood = 1.0;
constexpr double kOutlierRBad = 1000.0;

// Gaussian-Gaussian priors.
constexpr double kGgMuMean = 0.0;
constexpr double kGgMuVar = 1.0;
constexpr double kGgSigmaMean = 1.0;
constexpr double kGgSigmaVar = 0.25;

}  // namespace

Model beta_bernoulli() {
    Model m;
    m.name = "beta-bernoulli";
    m.num_outputs = 1;
    m.init = [] { return Memory{}; };
    m.step = [](Memory& mem, const std::vector<double>& input, InferCtx& ctx) {
        if (mem.empty()) {
            mem.push_back(
                ctx.assume(Dist::beta(Expr::integer(1), Expr::integer(1))));
        }
        Expr p = mem[0];
        ctx.observe(Dist::bernoulli(p), input[0]);
        return std::vector<Expr>{p};
    };
    return m;
}

Model kalman_1d() {
    Model m;
    m.name = "kalman1d";
    m.num_outputs = 1;
    m.init = [] { return Memory{}; };
    m.step = [](Memory& mem, const std::vector<double>& input, InferCtx& ctx) {
        Expr x = mem.empty()
                     ? ctx.assume(Dist::gaussian(rc(kKalmanM0), rc(kKalmanP0)))
                     : ctx.assume(Dist::gaussian(mem[0], rc(kKalmanQ)));
        ctx.observe(Dist::gaussian(x, rc(kKalmanR)), input[0]);
        mem = {x};
        return std::vector<Expr>{x};
    };
    return m;
}

Model gaussian_gaussian() {
    Model m;
    m.name = "gaussian-gaussian";
    m.num_outputs = 1;
    m.init = [] { return Memory{}; };
    m.step = [](Memory& mem, const std::vector<double>& input, InferCtx& ctx) {
        if (mem.empty()) {
            mem.push_back(ctx.assume(Dist::gaussian(rc(kGgMuMean), rc(kGgMuVar))));
            mem.push_back(
                ctx.assume(Dist::gaussian(rc(kGgSigmaMean), rc(kGgSigmaVar))));
        }
        Expr mu = mem[0];
        Expr sigma = mem[1];
        ctx.observe(Dist::gaussian(mu, sigma * sigma), input[0]);
        return std::vector<Expr>{mu};
    };
    return m;
}

Model outlier_model(double outlier_prob) {
    Model m;
    m.name = "outlier";
    m.num_outputs = 1;
    m.init = [] { return Memory{}; };
    m.step = [outlier_prob](Memory& mem, const std::vector<double>& input,
                            InferCtx& ctx) {
        Expr x = mem.empty()
                     ? ctx.assume(Dist::gaussian(rc(kKalmanM0), rc(kKalmanP0)))
                     : ctx.assume(Dist::gaussian(mem[0], rc(kKalmanQ)));
        // The branch is sampled immediately so the Gaussian sub-state stays
        // in the closed family.
        double bad = ctx.value(ctx.assume(Dist::bernoulli(rc(outlier_prob))));
        double rvar = bad == 1.0 ? kOutlierRBad : kOutlierRGood;
        ctx.observe(Dist::gaussian(x, rc(rvar)), input[0]);
        mem = {x};
        return std::vector<Expr>{x};
    };
    return m;
}

Model outlier() { return outlier_model(kOutlierProb); }

Model tree() {
    Model m;
    m.name = "tree";
    m.num_outputs = 1;
    m.init = [] { return Memory{}; };
    m.step = [](Memory& mem, const std::vector<double>& input, InferCtx& ctx) {
        (void)mem;
        Expr root = ctx.assume(Dist::gaussian(rc(0.0), rc(kTreeRootVar)));
        Expr c1 = ctx.assume(Dist::gaussian(root, rc(kTreeChildVar)));
        Expr c2 = ctx.assume(Dist::gaussian(root, rc(kTreeChildVar)));
        // Interior unobserved leaves keep the full three-level shape.
        ctx.assume(Dist::gaussian(c1, rc(kTreeLeafVar)));
        ctx.assume(Dist::gaussian(c2, rc(kTreeLeafVar)));
        ctx.observe(Dist::gaussian(c1, rc(kTreeLeafVar)), input[0]);
        ctx.observe(Dist::gaussian(c2, rc(kTreeLeafVar)), input[1]);
        return std::vector<Expr>{root};
    };
    return m;
}

Model wheels() {
    Model m;
    m.name = "wheels";
    m.num_outputs = 2;
    m.init = [] { return Memory{}; };
    m.step = [](Memory& mem, const std::vector<double>& input, InferCtx& ctx) {
        Expr omega =
            mem.empty()
                ? ctx.assume(Dist::gaussian(rc(0.0), rc(kOmegaVar)))
                : ctx.assume(Dist::gaussian(mem[0], rc(kOmegaVar)));
        Expr vel = mem.empty()
                       ? ctx.assume(Dist::gaussian(rc(0.0), rc(kVelVar)))
                       : ctx.assume(Dist::gaussian(mem[1], rc(kVelVar)));
        Expr wb = rc(kWheelBase);
        ctx.observe(Dist::gaussian(vel - wb * omega, rc(kSensorErr)), input[0]);
        ctx.observe(Dist::gaussian(vel + wb * omega, rc(kSensorErr)), input[1]);
        mem = {omega, vel};
        return std::vector<Expr>{vel, omega};
    };
    return m;
}

namespace {

GeneratedData gen_beta_bernoulli(std::uint64_t seed, int steps) {
    RandomSource rng = RandomSource::child(seed, 1);
    double p = rng.uniform();
    GeneratedData d;
    for (int t = 0; t < steps; ++t) {
        d.inputs.push_back({rng.uniform() < p ? 1.0 : 0.0});
        d.truths.push_back({p});
    }
    return d;
}

GeneratedData gen_kalman(std::uint64_t seed, int steps) {
    RandomSource rng = RandomSource::child(seed, 2);
    GeneratedData d;
    double x = kKalmanM0 + std::sqrt(kKalmanP0) * rng.gaussian();
    for (int t = 0; t < steps; ++t) {
        if (t > 0) x += std::sqrt(kKalmanQ) * rng.gaussian();
        d.inputs.push_back({x + std::sqrt(kKalmanR) * rng.gaussian()});
        d.truths.push_back({x});
    }
    return d;
}

GeneratedData gen_gaussian_gaussian(std::uint64_t seed, int steps) {
    RandomSource rng = RandomSource::child(seed, 3);
    double mu = kGgMuMean + std::sqrt(kGgMuVar) * rng.gaussian();
    double sigma = kGgSigmaMean + std::sqrt(kGgSigmaVar) * rng.gaussian();
    GeneratedData d;
    for (int t = 0; t < steps; ++t) {
        d.inputs.push_back({mu + std::abs(sigma) * rng.gaussian()});
        d.truths.push_back({mu});
    }
    return d;
}

GeneratedData gen_outlier(std::uint64_t seed, int steps) {
    RandomSource rng = RandomSource::child(seed, 4);
    GeneratedData d;
    double x = kKalmanM0 + std::sqrt(kKalmanP0) * rng.gaussian();
    for (int t = 0; t < steps; ++t) {
        if (t > 0) x += std::sqrt(kKalmanQ) * rng.gaussian();
        bool bad = rng.uniform() < kOutlierProb;
        double rvar = bad ? kOutlierRBad : kOutlierRGood;
        d.inputs.push_back({x + std::sqrt(rvar) * rng.gaussian()});
        d.truths.push_back({x});
    }
    return d;
}

GeneratedData gen_tree(std::uint64_t seed, int steps) {
    RandomSource rng = RandomSource::child(seed, 5);
    GeneratedData d;
    for (int t = 0; t < steps; ++t) {
        double r = std::sqrt(kTreeRootVar) * rng.gaussian();
        double c1 = r + std::sqrt(kTreeChildVar) * rng.gaussian();
        double c2 = r + std::sqrt(kTreeChildVar) * rng.gaussian();
        double l = c1 + std::sqrt(kTreeLeafVar) * rng.gaussian();
        double rr = c2 + std::sqrt(kTreeLeafVar) * rng.gaussian();
        d.inputs.push_back({l, rr});
        d.truths.push_back({r});
    }
    return d;
}

GeneratedData gen_wheels(std::uint64_t seed, int steps) {
    RandomSource rng = RandomSource::child(seed, 6);
    GeneratedData d;
    double omega = 0.0;
    double vel = 0.0;
    for (int t = 0; t < steps; ++t) {
        omega += std::sqrt(kOmegaVar) * rng.gaussian();
        vel += std::sqrt(kVelVar) * rng.gaussian();
        double left = vel - kWheelBase * omega +
                      std::sqrt(kSensorErr) * rng.gaussian();
        double right = vel + kWheelBase * omega +
                       std::sqrt(kSensorErr) * rng.gaussian();
        d.inputs.push_back({left, right});
        d.truths.push_back({vel, omega});
    }
    return d;
}

}  // namespace

const std::vector<BenchmarkSpec>& benchmarks() {
    static const std::vector<BenchmarkSpec> specs = {
        {"beta-bernoulli",
         1,
         {{"alpha0", 1.0}, {"beta0", 1.0}},
         beta_bernoulli,
         gen_beta_bernoulli},
        {"gaussian-gaussian",
         1,
         {{"mu_mean", kGgMuMean},
          {"mu_var", kGgMuVar},
          {"sigma_mean", kGgSigmaMean},
          {"sigma_var", kGgSigmaVar}},
         gaussian_gaussian,
         gen_gaussian_gaussian},
        {"kalman1d",
         1,
         {{"m0", kKalmanM0}, {"p0", kKalmanP0}, {"q", kKalmanQ}, {"r", kKalmanR}},
         kalman_1d,
         gen_kalman},
        {"outlier",
         1,
         {{"m0", kKalmanM0},
          {"p0", kKalmanP0},
          {"q", kKalmanQ},
          {"outlier_prob", kOutlierProb},
          {"r_good", kOutlierRGood},
          {"r_bad", kOutlierRBad}},
         outlier,
         gen_outlier},
        {"tree",
         1,
         {{"root_var", kTreeRootVar},
          {"child_var", kTreeChildVar},
          {"leaf_var", kTreeLeafVar}},
         tree,
         gen_tree},
        {"wheels",
         2,
         {{"omega_var", kOmegaVar},
          {"vel_var", kVelVar},
          {"wb", kWheelBase},
          {"sensor_err", kSensorErr}},
         wheels,
         gen_wheels},
    };
    return specs;
}

const BenchmarkSpec& benchmark(const std::string& name) {
    for (const BenchmarkSpec& b : benchmarks()) {
        if (b.name == name) return b;
    }
    throw UnknownModelError("unknown model: " + name);
}

double squared_error(const StepOutput& out, const std::vector<double>& truth) {
    double acc = 0.0;
    for (std::size_t j = 0; j < truth.size(); ++j) {
        double diff = out.mixture_mean(static_cast<int>(j)) - truth[j];
        acc += diff * diff;
    }
    return acc / static_cast<double>(truth.size());
}

}  // namespace ssi::models
