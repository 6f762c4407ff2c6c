// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/dist.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "ssi/error.hpp"
#include "ssi/state.hpp"

namespace ssi {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454836;
}  // namespace

Dist Dist::gaussian(Expr mean, Expr variance) {
    return Dist(DistKind::gaussian, {std::move(mean), std::move(variance)});
}
Dist Dist::beta(Expr alpha, Expr beta) {
    return Dist(DistKind::beta, {std::move(alpha), std::move(beta)});
}
Dist Dist::bernoulli(Expr prob) {
    return Dist(DistKind::bernoulli, {std::move(prob)});
}
Dist Dist::delta(Expr value) {
    return Dist(DistKind::delta, {std::move(value)});
}

const Expr& Dist::mean() const {
    assert(kind_ == DistKind::gaussian);
    return params_[0];
}
const Expr& Dist::variance() const {
    assert(kind_ == DistKind::gaussian);
    return params_[1];
}
const Expr& Dist::alpha() const {
    assert(kind_ == DistKind::beta);
    return params_[0];
}
const Expr& Dist::beta_param() const {
    assert(kind_ == DistKind::beta);
    return params_[1];
}
const Expr& Dist::prob() const {
    assert(kind_ == DistKind::bernoulli);
    return params_[0];
}
const Expr& Dist::value() const {
    assert(kind_ == DistKind::delta);
    return params_[0];
}

Dist Dist::with_params(std::vector<Expr> params) const {
    assert(params.size() == params_.size());
    return Dist(kind_, std::move(params));
}

bool Dist::operator==(const Dist& other) const {
    if (kind_ != other.kind_) return false;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (!(params_[i] == other.params_[i])) return false;
    }
    return true;
}

ClosedDist ClosedDist::gaussian(double mean, double variance) {
    return ClosedDist(DistKind::gaussian, mean, variance);
}
ClosedDist ClosedDist::beta(double alpha, double beta) {
    return ClosedDist(DistKind::beta, alpha, beta);
}
ClosedDist ClosedDist::bernoulli(double prob) {
    return ClosedDist(DistKind::bernoulli, prob, 0.0);
}
ClosedDist ClosedDist::delta(double value) {
    return ClosedDist(DistKind::delta, value, 0.0);
}

double ClosedDist::mean() const {
    switch (kind_) {
        case DistKind::gaussian: return p0_;
        case DistKind::beta: return p0_ / (p0_ + p1_);
        case DistKind::bernoulli: return p0_;
        case DistKind::delta: return p0_;
    }
    return 0.0;
}

double ClosedDist::variance() const {
    switch (kind_) {
        case DistKind::gaussian: return p1_;
        case DistKind::beta: {
            double s = p0_ + p1_;
            return p0_ * p1_ / (s * s * (s + 1.0));
        }
        case DistKind::bernoulli: return p0_ * (1.0 - p0_);
        case DistKind::delta: return 0.0;
    }
    return 0.0;
}

ClosedDist close(const Dist& d, const SymbolicState& g) {
    std::vector<double> p;
    p.reserve(d.params().size());
    for (const Expr& e : d.params()) {
        Expr folded = eval(e, g);
        if (!folded.is_const()) {
            throw NotClosedError("parameter stays symbolic: " + to_string(folded));
        }
        p.push_back(folded.const_value());
    }
    switch (d.kind()) {
        case DistKind::gaussian:
            if (!(p[1] > 0.0)) throw InvalidParamError("gaussian variance must be > 0");
            return ClosedDist::gaussian(p[0], p[1]);
        case DistKind::beta:
            if (!(p[0] > 0.0) || !(p[1] > 0.0)) {
                throw InvalidParamError("beta parameters must be > 0");
            }
            return ClosedDist::beta(p[0], p[1]);
        case DistKind::bernoulli:
            if (!(p[0] >= 0.0 && p[0] <= 1.0)) {
                throw InvalidParamError("bernoulli probability must be in [0, 1]");
            }
            return ClosedDist::bernoulli(p[0]);
        case DistKind::delta:
            return ClosedDist::delta(p[0]);
    }
    throw Error("unreachable distribution kind");
}

double draw(const ClosedDist& d, RandomSource& rng) {
    switch (d.kind()) {
        case DistKind::gaussian:
            return d.param(0) + std::sqrt(d.param(1)) * rng.gaussian();
        case DistKind::beta:
            return rng.beta(d.param(0), d.param(1));
        case DistKind::bernoulli:
            return rng.uniform() < d.param(0) ? 1.0 : 0.0;
        case DistKind::delta:
            return d.param(0);
    }
    return 0.0;
}

double score(const ClosedDist& d, double v) {
    switch (d.kind()) {
        case DistKind::gaussian: {
            double var = d.param(1);
            double diff = v - d.param(0);
            return -0.5 * (kLog2Pi + std::log(var)) - diff * diff / (2.0 * var);
        }
        case DistKind::beta: {
            if (!(v > 0.0 && v < 1.0)) return kNegInf;
            double a = d.param(0);
            double b = d.param(1);
            double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
            return (a - 1.0) * std::log(v) + (b - 1.0) * std::log1p(-v) - log_beta;
        }
        case DistKind::bernoulli: {
            double p = d.param(0);
            if (v == 1.0) return p > 0.0 ? std::log(p) : kNegInf;
            if (v == 0.0) return p < 1.0 ? std::log1p(-p) : kNegInf;
            return kNegInf;
        }
        case DistKind::delta: {
            double w = d.param(0);
            return std::abs(v - w) <= 1e-12 * (1.0 + std::abs(w)) ? 0.0 : kNegInf;
        }
    }
    return kNegInf;
}

std::string to_string(const Dist& d) {
    switch (d.kind()) {
        case DistKind::gaussian:
            return "N(" + to_string(d.mean()) + ", " + to_string(d.variance()) + ")";
        case DistKind::beta:
            return "Beta(" + to_string(d.alpha()) + ", " + to_string(d.beta_param()) + ")";
        case DistKind::bernoulli:
            return "Bern(" + to_string(d.prob()) + ")";
        case DistKind::delta:
            return "Delta(" + to_string(d.value()) + ")";
    }
    return "?";
}

std::string to_string(const ClosedDist& d) {
    switch (d.kind()) {
        case DistKind::gaussian:
            return "N(" + format_number(d.param(0)) + ", " + format_number(d.param(1)) + ")";
        case DistKind::beta:
            return "Beta(" + format_number(d.param(0)) + ", " + format_number(d.param(1)) + ")";
        case DistKind::bernoulli:
            return "Bern(" + format_number(d.param(0)) + ")";
        case DistKind::delta:
            return "Delta(" + format_number(d.param(0)) + ")";
    }
    return "?";
}

}  // namespace ssi
