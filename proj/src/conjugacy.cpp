// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/conjugacy.hpp"

#include <algorithm>

#include "ssi/error.hpp"

namespace ssi {

namespace {

// Gaussian-Gaussian conjugate rewrite. Requires both variances constant and
// the child mean affine in the parent. The prior is pushed through the
// affine map before the precision-weighted combination, so the posterior is
// formed from the transformed variance a^2 * var0, and the inverse map is
// applied to the result.
bool swap_gaussian(RvId x1, RvId x2, SymbolicState& g) {
    const Dist& d1 = g.at(x1);
    const Dist& d2 = g.at(x2);
    auto af = affine_of(d2.mean(), x1, g);
    if (!af) return false;
    if (!is_const(d1.variance(), g) || !is_const(d2.variance(), g)) return false;
    Expr a = af->scale;
    Expr b = af->offset;
    if (a.is_const() && a.const_value() == 0.0) return false;

    Expr mu0 = d1.mean();
    Expr var0 = d1.variance();
    Expr var = d2.variance();
    Expr one = Expr::integer(1);

    Expr mu0p = eval(a * mu0 + b, g);
    Expr var0p = eval(a * a * var0, g);
    Expr var0pp = eval(one / (one / var0p + one / var), g);
    Expr mu0pp = eval((mu0p / var0p + Expr::var(x2) / var) * var0pp, g);

    g.rebind(x1, Dist::gaussian(eval((mu0pp - b) / a, g),
                                eval(var0pp / (a * a), g)));
    g.rebind(x2, Dist::gaussian(mu0p, eval(var0p + var, g)));
    return true;
}

bool swap_beta_bernoulli(RvId x1, RvId x2, SymbolicState& g) {
    const Dist& d1 = g.at(x1);
    const Dist& d2 = g.at(x2);
    // The guard is the literal pattern Bern(X1).
    if (!(d2.prob().is_var() && d2.prob().var_id() == x1)) return false;
    Expr a = d1.alpha();
    Expr b = d1.beta_param();
    Expr c2 = Expr::var(x2);
    Expr zero = Expr::integer(0);
    Expr one = Expr::integer(1);

    g.rebind(x1, Dist::beta(eval(a + ite(c2, one, zero), g),
                            eval(b + ite(c2, zero, one), g)));
    g.rebind(x2, Dist::bernoulli(eval(a / (a + b), g)));
    return true;
}

bool swap_bernoulli(RvId x1, RvId x2, SymbolicState& g) {
    Expr p1 = g.at(x1).prob();
    Expr p2 = g.at(x2).prob();
    Expr c2 = Expr::var(x2);
    Expr zero = Expr::integer(0);
    Expr one = Expr::integer(1);

    // Sum out x1 for the child, then Bayes' rule for the parent.
    Expr p2_hi = subst(p2, x1, one);
    Expr p2_lo = subst(p2, x1, zero);
    Expr p2p = eval(p1 * p2_hi + (one - p1) * p2_lo, g);
    Expr likelihood = ite(c2, p2_hi, one - p2_hi);
    Expr evidence = ite(c2, p2p, one - p2p);
    Expr p1p = eval(p1 * likelihood / evidence, g);

    g.rebind(x1, Dist::bernoulli(p1p));
    g.rebind(x2, Dist::bernoulli(p2p));
    return true;
}

}  // namespace

bool swap(RvId x1, RvId x2, SymbolicState& g) {
    std::vector<RvId> par2 = g.parents(x2);
    if (std::find(par2.begin(), par2.end(), x1) == par2.end()) {
        throw NotParentError("swap: " + to_string(x1) + " is not a parent of " +
                             to_string(x2));
    }
    DistKind k1 = g.at(x1).kind();
    DistKind k2 = g.at(x2).kind();
    if (k1 == DistKind::gaussian && k2 == DistKind::gaussian) {
        return swap_gaussian(x1, x2, g);
    }
    if (k1 == DistKind::beta && k2 == DistKind::bernoulli) {
        return swap_beta_bernoulli(x1, x2, g);
    }
    if (k1 == DistKind::bernoulli && k2 == DistKind::bernoulli) {
        return swap_bernoulli(x1, x2, g);
    }
    return false;
}

}  // namespace ssi
