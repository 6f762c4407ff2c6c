// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/expr.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "ssi/error.hpp"
#include "ssi/state.hpp"

namespace ssi {

int arity(Op op) {
    switch (op) {
        case Op::sqrt: return 1;
        case Op::ite: return 3;
        default: return 2;
    }
}

const char* op_name(Op op) {
    switch (op) {
        case Op::add: return "+";
        case Op::sub: return "-";
        case Op::mul: return "*";
        case Op::div: return "/";
        case Op::sqrt: return "sqrt";
        case Op::ite: return "ite";
        case Op::eq: return "=";
        case Op::neq: return "!=";
        case Op::lt: return "<";
        case Op::lte: return "<=";
    }
    return "?";
}

struct Expr::Node {
    Kind kind;
    double real = 0.0;
    std::int64_t integer = 0;
    RvId var{};
    Op op = Op::add;
    std::vector<Expr> args;
};

Expr Expr::real(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::real_const;
    n->real = value;
    return Expr(std::move(n));
}

Expr Expr::integer(std::int64_t value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::int_const;
    n->integer = value;
    return Expr(std::move(n));
}

Expr Expr::var(RvId x) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::var;
    n->var = x;
    return Expr(std::move(n));
}

Expr Expr::app(Op op, std::vector<Expr> args) {
    assert(static_cast<int>(args.size()) == arity(op));
    auto n = std::make_shared<Node>();
    n->kind = Kind::app;
    n->op = op;
    n->args = std::move(args);
    return Expr(std::move(n));
}

double Expr::const_value() const {
    assert(is_const());
    return kind() == Kind::real_const ? node_->real
                                      : static_cast<double>(node_->integer);
}

std::int64_t Expr::int_value() const {
    assert(is_int_const());
    return node_->integer;
}

RvId Expr::var_id() const {
    assert(is_var());
    return node_->var;
}

Op Expr::op() const {
    assert(is_app());
    return node_->op;
}

const std::vector<Expr>& Expr::args() const {
    assert(is_app());
    return node_->args;
}

bool Expr::operator==(const Expr& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::real_const: return node_->real == other.node_->real;
        case Kind::int_const: return node_->integer == other.node_->integer;
        case Kind::var: return node_->var == other.node_->var;
        case Kind::app:
            if (node_->op != other.node_->op) return false;
            if (node_->args.size() != other.node_->args.size()) return false;
            for (std::size_t i = 0; i < node_->args.size(); ++i) {
                if (!(node_->args[i] == other.node_->args[i])) return false;
            }
            return true;
    }
    return false;
}

Expr operator+(Expr a, Expr b) { return Expr::app(Op::add, {std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::app(Op::sub, {std::move(a), std::move(b)}); }
Expr operator*(Expr a, Expr b) { return Expr::app(Op::mul, {std::move(a), std::move(b)}); }
Expr operator/(Expr a, Expr b) { return Expr::app(Op::div, {std::move(a), std::move(b)}); }
Expr sqrt(Expr a) { return Expr::app(Op::sqrt, {std::move(a)}); }
Expr ite(Expr cond, Expr then_e, Expr else_e) {
    return Expr::app(Op::ite, {std::move(cond), std::move(then_e), std::move(else_e)});
}

namespace {

void collect_vars(const Expr& e, std::vector<RvId>& order, std::set<RvId>& seen) {
    switch (e.kind()) {
        case Expr::Kind::var:
            if (seen.insert(e.var_id()).second) order.push_back(e.var_id());
            break;
        case Expr::Kind::app:
            for (const Expr& a : e.args()) collect_vars(a, order, seen);
            break;
        default: break;
    }
}

}  // namespace

std::set<RvId> free_rvs(const Expr& e) {
    std::vector<RvId> order;
    std::set<RvId> seen;
    collect_vars(e, order, seen);
    return seen;
}

std::vector<RvId> free_rvs_ordered(const Expr& e) {
    std::vector<RvId> order;
    std::set<RvId> seen;
    collect_vars(e, order, seen);
    return order;
}

Expr subst(const Expr& e, RvId x, const Expr& r) {
    switch (e.kind()) {
        case Expr::Kind::var:
            return e.var_id() == x ? r : e;
        case Expr::Kind::app: {
            bool changed = false;
            std::vector<Expr> args;
            args.reserve(e.args().size());
            for (const Expr& a : e.args()) {
                args.push_back(subst(a, x, r));
                changed = changed || !(args.back() == a);
            }
            return changed ? Expr::app(e.op(), std::move(args)) : e;
        }
        default:
            return e;
    }
}

namespace {

bool truthy(const Expr& c) { return c.const_value() != 0.0; }

// Constant folding over evaluated arguments. Integer arithmetic stays exact
// for +, -, *; division and sqrt always produce reals; comparisons produce
// 0/1 integers.
Expr fold(Op op, const std::vector<Expr>& args) {
    auto all_int = [&] {
        for (const Expr& a : args)
            if (!a.is_int_const()) return false;
        return true;
    };
    switch (op) {
        case Op::add:
            if (all_int()) return Expr::integer(args[0].int_value() + args[1].int_value());
            return Expr::real(args[0].const_value() + args[1].const_value());
        case Op::sub:
            if (all_int()) return Expr::integer(args[0].int_value() - args[1].int_value());
            return Expr::real(args[0].const_value() - args[1].const_value());
        case Op::mul:
            if (all_int()) return Expr::integer(args[0].int_value() * args[1].int_value());
            return Expr::real(args[0].const_value() * args[1].const_value());
        case Op::div: {
            double d = args[1].const_value();
            if (d == 0.0) throw DivisionByZeroError("division by zero constant");
            return Expr::real(args[0].const_value() / d);
        }
        case Op::sqrt: {
            double v = args[0].const_value();
            if (v < 0.0) throw NegativeSqrtError("sqrt of negative constant");
            return Expr::real(std::sqrt(v));
        }
        case Op::eq:
            return Expr::integer(args[0].const_value() == args[1].const_value() ? 1 : 0);
        case Op::neq:
            return Expr::integer(args[0].const_value() != args[1].const_value() ? 1 : 0);
        case Op::lt:
            return Expr::integer(args[0].const_value() < args[1].const_value() ? 1 : 0);
        case Op::lte:
            return Expr::integer(args[0].const_value() <= args[1].const_value() ? 1 : 0);
        case Op::ite:
            return truthy(args[0]) ? args[1] : args[2];
    }
    throw Error("unreachable operator");
}

}  // namespace

Expr eval(const Expr& e, const SymbolicState& g) {
    switch (e.kind()) {
        case Expr::Kind::real_const:
        case Expr::Kind::int_const:
            return e;
        case Expr::Kind::var: {
            RvId x = e.var_id();
            if (g.contains(x) && g.at(x).kind() == DistKind::delta) {
                return eval(g.at(x).value(), g);
            }
            return e;
        }
        case Expr::Kind::app: {
            std::vector<Expr> args;
            args.reserve(e.args().size());
            bool all_const = true;
            for (const Expr& a : e.args()) {
                args.push_back(eval(a, g));
                all_const = all_const && args.back().is_const();
            }
            if (all_const) return fold(e.op(), args);
            // A constant condition still selects the branch.
            if (e.op() == Op::ite && args[0].is_const()) {
                return truthy(args[0]) ? args[1] : args[2];
            }
            return Expr::app(e.op(), std::move(args));
        }
    }
    throw Error("unreachable expression kind");
}

bool is_const(const Expr& e, const SymbolicState& g) {
    return eval(e, g).is_const();
}

namespace {

// Recursive affine decomposition of an already-evaluated term. Precise
// enough to recognize every mean produced by the conjugate rewrites.
std::optional<AffineForm> affine_rec(const Expr& e, RvId x,
                                     const SymbolicState& g) {
    if (free_rvs(e).count(x) == 0) {
        return AffineForm{Expr::integer(0), e};
    }
    switch (e.kind()) {
        case Expr::Kind::var:
            // free_rvs said x occurs, so this is x itself.
            return AffineForm{Expr::integer(1), Expr::integer(0)};
        case Expr::Kind::app: {
            const auto& args = e.args();
            switch (e.op()) {
                case Op::add: {
                    auto l = affine_rec(args[0], x, g);
                    auto r = affine_rec(args[1], x, g);
                    if (!l || !r) return std::nullopt;
                    return AffineForm{eval(l->scale + r->scale, g),
                                      eval(l->offset + r->offset, g)};
                }
                case Op::sub: {
                    auto l = affine_rec(args[0], x, g);
                    auto r = affine_rec(args[1], x, g);
                    if (!l || !r) return std::nullopt;
                    return AffineForm{eval(l->scale - r->scale, g),
                                      eval(l->offset - r->offset, g)};
                }
                case Op::mul: {
                    bool left_free = free_rvs(args[0]).count(x) == 0;
                    bool right_free = free_rvs(args[1]).count(x) == 0;
                    if (!left_free && !right_free) return std::nullopt;
                    const Expr& factor = left_free ? args[0] : args[1];
                    auto f = affine_rec(left_free ? args[1] : args[0], x, g);
                    if (!f) return std::nullopt;
                    return AffineForm{eval(factor * f->scale, g),
                                      eval(factor * f->offset, g)};
                }
                case Op::div: {
                    if (free_rvs(args[1]).count(x) != 0) return std::nullopt;
                    auto l = affine_rec(args[0], x, g);
                    if (!l) return std::nullopt;
                    return AffineForm{eval(l->scale / args[1], g),
                                      eval(l->offset / args[1], g)};
                }
                default:
                    // sqrt, ite, comparisons with x inside: not affine.
                    return std::nullopt;
            }
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

std::optional<AffineForm> affine_of(const Expr& e, RvId x,
                                    const SymbolicState& g) {
    return affine_rec(eval(e, g), x, g);
}

std::string format_number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string to_string(RvId x) { return "X" + std::to_string(x.id); }

std::string to_string(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::real_const:
            return format_number(e.const_value());
        case Expr::Kind::int_const:
            return std::to_string(e.int_value());
        case Expr::Kind::var:
            return to_string(e.var_id());
        case Expr::Kind::app: {
            std::string out = "app(";
            out += op_name(e.op());
            for (const Expr& a : e.args()) {
                out += ", ";
                out += to_string(a);
            }
            out += ")";
            return out;
        }
    }
    return "?";
}

}  // namespace ssi
