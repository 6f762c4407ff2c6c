// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ssi {

class SymbolicState;

/// Identifier of a random variable. Ids are allocated by a monotone counter
/// inside one SymbolicState lineage and are never reused.
struct RvId {
    std::uint32_t id = 0;
    auto operator<=>(const RvId&) const = default;
};

enum class Op { add, sub, mul, div, sqrt, ite, eq, neq, lt, lte };

int arity(Op op);
const char* op_name(Op op);

/// Immutable symbolic term: a real or integer constant, a random-variable
/// reference, or an n-ary operator application. Copies share structure.
class Expr {
  public:
    enum class Kind { real_const, int_const, var, app };

    Expr() : Expr(real(0.0)) {}

    static Expr real(double value);
    static Expr integer(std::int64_t value);
    static Expr var(RvId x);
    static Expr app(Op op, std::vector<Expr> args);

    Kind kind() const { return node_->kind; }
    bool is_const() const {
        return kind() == Kind::real_const || kind() == Kind::int_const;
    }
    bool is_var() const { return kind() == Kind::var; }
    bool is_app() const { return kind() == Kind::app; }

    /// Numeric value of a constant node (integer constants widen to double).
    double const_value() const;
    bool is_int_const() const { return kind() == Kind::int_const; }
    std::int64_t int_value() const;

    RvId var_id() const;

    Op op() const;
    const std::vector<Expr>& args() const;

    /// Structural equality.
    bool operator==(const Expr& other) const;

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Term constructors mirroring the usual arithmetic notation. These build
// symbolic applications; no numeric computation happens here.
Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr sqrt(Expr a);
Expr ite(Expr cond, Expr then_e, Expr else_e);

/// Set of random variables occurring in `e`.
std::set<RvId> free_rvs(const Expr& e);

/// Free variables in first-occurrence order over a left-to-right traversal.
std::vector<RvId> free_rvs_ordered(const Expr& e);

/// `e` with every occurrence of `x` replaced by `r`.
Expr subst(const Expr& e, RvId x, const Expr& r);

/// Partial evaluator. Folds constant subterms, substitutes Delta-distributed
/// variables by their (evaluated) contents, and leaves everything else
/// symbolic. Throws DivisionByZeroError / NegativeSqrtError on fully-constant
/// faulting arithmetic.
Expr eval(const Expr& e, const SymbolicState& g);

/// True iff `e` evaluates to a constant under `g`.
bool is_const(const Expr& e, const SymbolicState& g);

/// Result of the affine analysis: e = scale * x + offset, with neither part
/// mentioning the analyzed variable.
struct AffineForm {
    Expr scale;
    Expr offset;
};

/// Recognizes `e` as an affine function of `x`, evaluating under `g` first so
/// Delta chains do not block recognition. Returns nullopt when the term is
/// not affine in `x` (or not recognized).
std::optional<AffineForm> affine_of(const Expr& e, RvId x,
                                    const SymbolicState& g);

/// Debug notation: app(+, app(*, 2, X0), 1).
std::string to_string(const Expr& e);
std::string to_string(RvId x);

/// Shortest round-trip decimal form; integral values print without a point.
std::string format_number(double v);

}  // namespace ssi
