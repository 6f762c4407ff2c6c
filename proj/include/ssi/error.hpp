// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ssi {

/// Base class for all faults raised by the inference runtime.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An expression or distribution refers to a random variable that is not
/// bound in the symbolic state.
struct UnboundVariableError : Error {
    using Error::Error;
};

/// A swap was requested between variables without a parent-child edge.
struct NotParentError : Error {
    using Error::Error;
};

/// Constant folding hit a division with zero denominator.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Constant folding hit a square root of a negative constant.
struct NegativeSqrtError : Error {
    using Error::Error;
};

/// A distribution parameter did not evaluate to a constant when a closed
/// form was required.
struct NotClosedError : Error {
    using Error::Error;
};

/// A closed distribution has parameters outside its valid range
/// (e.g. nonpositive variance). Signals a modeling error.
struct InvalidParamError : Error {
    using Error::Error;
};

/// The dependency graph of the symbolic state contains a cycle. Should be
/// unreachable; indicates corrupted state.
struct CycleError : Error {
    using Error::Error;
};

/// The can_swap assertion inside hoisting failed. This is a fatal internal
/// invariant violation, not a user error.
struct InternalCycleError : Error {
    using Error::Error;
};

/// Operation not defined for the given input (e.g. extracting the marginal
/// of a composite symbolic expression).
struct UnsupportedError : Error {
    using Error::Error;
};

struct InvalidParticleCountError : Error {
    using Error::Error;
};

/// Every particle carries weight zero: the model observed an impossible
/// value under all executions.
struct AllParticlesDeadError : Error {
    using Error::Error;
};

struct UnknownModelError : Error {
    using Error::Error;
};

struct InvalidFlagError : Error {
    using Error::Error;
};

}  // namespace ssi
