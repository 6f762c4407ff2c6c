// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssi/rng.hpp"
#include "ssi/state.hpp"

namespace ssi {

/// Optional event log: one line per swap, sample, and intervention. Used by
/// the CLI --trace flag and by golden-trace tests.
struct Trace {
    std::vector<std::string> lines;
    std::uint64_t swap_attempts = 0;
    void log(std::string line) { lines.push_back(std::move(line)); }
};

/// Turns `x` into a root by swapping it above its ancestors, sampling
/// non-conjugate blockers as a fallback. The resulting state equals the
/// input conditioned on any variables that had to be sampled.
void hoist(RvId x, SymbolicState& g, RandomSource& rng, Trace* trace = nullptr);

/// Samples `x` from its closed marginal given everything previously sampled
/// or observed, and rebinds it to the drawn point mass.
double value(RvId x, SymbolicState& g, RandomSource& rng,
             Trace* trace = nullptr);

/// Conditions the state on `x` taking value `v`. Returns the log-density of
/// the marginal of `x` at `v` (-inf when outside the support).
double observe(RvId x, double v, SymbolicState& g, RandomSource& rng,
               Trace* trace = nullptr);

/// Closed marginal of a symbolic value: Delta for constants, hoist-and-close
/// on a private copy for a single variable reference. Composite expressions
/// are unsupported. The input state is unchanged; forced samplings on the
/// copy advance `rng` but leave the caller's draw count alone.
ClosedDist marginal_of(const Expr& v, const SymbolicState& g,
                       RandomSource& rng, Trace* trace = nullptr);

}  // namespace ssi
