// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ssi/dist.hpp"
#include "ssi/expr.hpp"

namespace ssi {

/// Finite map from random variables to symbolic distributions, plus the
/// fresh-id counter and the sampling instrumentation counter. The dependency
/// graph (parent -> child through free variables of the child's parameters)
/// is kept acyclic by every mutator.
///
/// A state is owned by exactly one particle; it is a deep-copyable value and
/// copies never share mutable structure.
class SymbolicState {
  public:
    SymbolicState() = default;

    /// Binds a fresh variable to `d`. Every variable mentioned by `d` must
    /// already be bound.
    RvId assume(const Dist& d);

    /// Rebinds `x` to Delta(v). Conditioning when `x` is a root.
    void intervene(RvId x, double v);

    /// Replaces each parameter of g(x) by its partially evaluated form.
    void eval_star(RvId x);

    bool contains(RvId x) const { return bindings_.count(x) != 0; }
    const Dist& at(RvId x) const;
    std::size_t size() const { return bindings_.size(); }

    /// Deduplicated parents of `x` in first-occurrence order over the
    /// distribution's parameter list (mean before variance, alpha before
    /// beta). Delta-bound parents count until an eval removes the reference.
    std::vector<RvId> parents(RvId x) const;

    /// Permutation of `xs` in which every element precedes all of its
    /// descendants within `xs` (reachability through the full graph).
    /// Ties break by ascending id.
    std::vector<RvId> topo_sort(std::vector<RvId> xs) const;

    /// Whether reversing the x1 -> x2 edge keeps the graph acyclic, with
    /// edges conservatively added from every parent of either variable to
    /// both. `x1` must currently be a parent of `x2`.
    bool can_swap(RvId x1, RvId x2) const;

    /// Restricts bindings to the ancestor closure of `live`.
    void gc(const std::set<RvId>& live);

    /// Ids bound in the state, ascending.
    std::vector<RvId> domain() const;

    std::uint64_t draw_count() const { return draw_count_; }
    void count_draw() { ++draw_count_; }

    /// Internal consistency check: closure and acyclicity. For tests.
    void validate() const;

    /// Graphviz dump of the dependency graph, nodes labeled with their
    /// pretty-printed distributions.
    std::string to_dot() const;

    // Raw rebind used by the conjugate rewrites; does not re-check
    // acyclicity (callers maintain it).
    void rebind(RvId x, Dist d);

  private:
    std::map<RvId, Dist> bindings_;
    std::uint32_t next_id_ = 0;
    std::uint64_t draw_count_ = 0;
};

}  // namespace ssi
