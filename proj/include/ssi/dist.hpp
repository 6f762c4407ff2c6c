// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "ssi/expr.hpp"
#include "ssi/rng.hpp"

namespace ssi {

enum class DistKind { gaussian, beta, bernoulli, delta };

/// Symbolic distribution: shape plus parameter expressions. Parameters may
/// mention random variables; range validity is only checked at closing time.
class Dist {
  public:
    static Dist gaussian(Expr mean, Expr variance);
    static Dist beta(Expr alpha, Expr beta);
    static Dist bernoulli(Expr prob);
    static Dist delta(Expr value);

    DistKind kind() const { return kind_; }
    std::span<const Expr> params() const { return params_; }

    const Expr& mean() const;      // gaussian
    const Expr& variance() const;  // gaussian
    const Expr& alpha() const;     // beta
    const Expr& beta_param() const;
    const Expr& prob() const;   // bernoulli
    const Expr& value() const;  // delta

    /// Same shape, parameters replaced positionally.
    Dist with_params(std::vector<Expr> params) const;

    bool operator==(const Dist& other) const;

  private:
    Dist(DistKind kind, std::vector<Expr> params)
        : kind_(kind), params_(std::move(params)) {}
    DistKind kind_;
    std::vector<Expr> params_;
};

/// Distribution with all parameters folded to constants and range-checked.
class ClosedDist {
  public:
    static ClosedDist gaussian(double mean, double variance);
    static ClosedDist beta(double alpha, double beta);
    static ClosedDist bernoulli(double prob);
    static ClosedDist delta(double value);

    DistKind kind() const { return kind_; }
    double param(int i) const { return i == 0 ? p0_ : p1_; }

    double mean() const;
    double variance() const;

    bool operator==(const ClosedDist&) const = default;

  private:
    ClosedDist(DistKind kind, double p0, double p1)
        : kind_(kind), p0_(p0), p1_(p1) {}
    DistKind kind_;
    double p0_;
    double p1_;
};

/// Folds every parameter of `d` under `g`. Throws NotClosedError when a
/// parameter stays symbolic, InvalidParamError when range checks fail.
ClosedDist close(const Dist& d, const SymbolicState& g);

/// Sample. Delta returns its value deterministically; Bernoulli returns
/// 1.0 or 0.0.
double draw(const ClosedDist& d, RandomSource& rng);

/// Natural-log density (Gaussian, Beta) or log mass (Bernoulli). Values
/// outside the support score -inf rather than faulting. Delta scores 0.0
/// within a 1e-12 relative tolerance of its point, -inf otherwise.
double score(const ClosedDist& d, double v);

std::string to_string(const Dist& d);
std::string to_string(const ClosedDist& d);

}  // namespace ssi
