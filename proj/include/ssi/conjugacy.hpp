// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ssi/state.hpp"

namespace ssi {

/// Reverses the dependency between a parent `x1` and its child `x2` using a
/// conjugate-prior rewrite, preserving the joint distribution. Handles
/// Gaussian-Gaussian (constant variances, affine mean), Beta-Bernoulli
/// (child exactly Bernoulli(x1)), and Bernoulli-Bernoulli. Returns false and
/// leaves the state untouched when no closed form applies. Bindings of all
/// other variables never change.
///
/// Legality (no dependency cycle) is the caller's obligation via can_swap.
bool swap(RvId x1, RvId x2, SymbolicState& g);

}  // namespace ssi
