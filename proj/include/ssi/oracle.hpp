// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ssi/state.hpp"

namespace ssi::oracle {

// Exact-inference references used by tests and acceptance criteria. These
// are direct numeric recursions sharing no algorithm with the runtime, so
// agreement between the two is evidence rather than tautology.

struct GaussianMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Textbook scalar Kalman filter. A missing observation skips the update.
std::vector<GaussianMoments> kalman_filter(
    double m0, double p0, double q, double r,
    const std::vector<std::optional<double>>& observations);

/// As above with per-step observation variances (for the outlier model).
std::vector<GaussianMoments> kalman_filter_rvar(
    double m0, double p0, double q,
    const std::vector<std::optional<std::pair<double, double>>>& observations);

struct MvnDist {
    std::vector<double> mean;
    std::vector<std::vector<double>> cov;
};

/// Multivariate Kalman recursion x_t = F x_{t-1} + w, y_t = H x_t + v for
/// dimensions up to 8. Observations may be missing per step.
std::vector<MvnDist> mv_kalman_filter(
    const std::vector<std::vector<double>>& F,
    const std::vector<std::vector<double>>& Q,
    const std::vector<std::vector<double>>& H,
    const std::vector<std::vector<double>>& R, const std::vector<double>& m0,
    const std::vector<std::vector<double>>& P0,
    const std::vector<std::optional<std::vector<double>>>& observations);

/// Gaussian conditioning of a joint N(mean, cov) on coordinates `observed`
/// taking `values`; returns the distribution of the remaining coordinates
/// in their original order.
MvnDist mvn_condition(const MvnDist& joint,
                      const std::vector<int>& observed,
                      const std::vector<double>& values);

/// Conjugate Beta update: (a + #ones, b + #zeros).
std::pair<double, double> beta_bernoulli_posterior(
    double a, double b, const std::vector<int>& flips);

/// Full joint table of an all-Bernoulli/Delta state with at most 16
/// variables. Probabilities are indexed by assignment bits in ascending
/// variable order (bit k = value of vars[k]).
struct BernoulliJoint {
    std::vector<RvId> vars;
    std::vector<double> probs;

    double marginal(RvId x) const;                    // P(x = 1)
    BernoulliJoint condition(RvId x, bool v) const;   // renormalized
};

BernoulliJoint enumerate_bernoulli_joint(const SymbolicState& g);

/// First and second joint moments from ancestral sampling, with CLT
/// standard errors.
struct Moments {
    std::vector<RvId> vars;
    std::vector<double> mean;
    std::vector<double> mean_se;
    std::vector<std::vector<double>> second;  // E[x_i x_j]
    std::vector<std::vector<double>> second_se;
};

Moments mc_moments(const SymbolicState& g, int n_samples, std::uint64_t seed);

/// Naive recursive interpreter of an expression under a total assignment.
/// Independent of the runtime's partial evaluator.
double eval_under(const Expr& e, const std::map<RvId, double>& assignment);

}  // namespace ssi::oracle
