// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/state.hpp"

#include <algorithm>
#include <functional>

#include "ssi/error.hpp"

namespace ssi {

namespace {

void require_bound(const SymbolicState& g, RvId x, const char* who) {
    if (!g.contains(x)) {
        throw UnboundVariableError(std::string(who) + ": unbound variable " +
                                   to_string(x));
    }
}

}  // namespace

const Dist& SymbolicState::at(RvId x) const {
    auto it = bindings_.find(x);
    if (it == bindings_.end()) {
        throw UnboundVariableError("unbound variable " + to_string(x));
    }
    return it->second;
}

RvId SymbolicState::assume(const Dist& d) {
    for (const Expr& p : d.params()) {
        for (RvId y : free_rvs(p)) require_bound(*this, y, "assume");
    }
    RvId x{next_id_++};
    bindings_.emplace(x, d);
    return x;
}

void SymbolicState::intervene(RvId x, double v) {
    require_bound(*this, x, "intervene");
    bindings_.erase(x);
    bindings_.emplace(x, Dist::delta(Expr::real(v)));
}

void SymbolicState::eval_star(RvId x) {
    require_bound(*this, x, "eval_star");
    const Dist& d = at(x);
    std::vector<Expr> params;
    params.reserve(d.params().size());
    for (const Expr& p : d.params()) params.push_back(eval(p, *this));
    rebind(x, d.with_params(std::move(params)));
}

void SymbolicState::rebind(RvId x, Dist d) {
    auto it = bindings_.find(x);
    if (it == bindings_.end()) {
        throw UnboundVariableError("rebind: unbound variable " + to_string(x));
    }
    it->second = std::move(d);
}

std::vector<RvId> SymbolicState::parents(RvId x) const {
    require_bound(*this, x, "parents");
    std::vector<RvId> out;
    std::set<RvId> seen;
    for (const Expr& p : at(x).params()) {
        for (RvId y : free_rvs_ordered(p)) {
            if (seen.insert(y).second) out.push_back(y);
        }
    }
    return out;
}

std::vector<RvId> SymbolicState::topo_sort(std::vector<RvId> xs) const {
    for (RvId x : xs) require_bound(*this, x, "topo_sort");

    // Reachability through the full graph: x precedes y when y is a
    // descendant of x.
    std::function<void(RvId, std::set<RvId>&)> reach = [&](RvId x,
                                                           std::set<RvId>& acc) {
        for (const auto& [child, dist] : bindings_) {
            if (acc.count(child)) continue;
            for (const Expr& p : dist.params()) {
                if (free_rvs(p).count(x)) {
                    acc.insert(child);
                    reach(child, acc);
                    break;
                }
            }
        }
    };

    std::map<RvId, std::set<RvId>> desc;
    for (RvId x : xs) reach(x, desc[x]);

    std::vector<RvId> pending = std::move(xs);
    std::sort(pending.begin(), pending.end());
    std::vector<RvId> out;
    out.reserve(pending.size());
    while (!pending.empty()) {
        bool progressed = false;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            RvId cand = pending[i];
            bool has_pending_ancestor = false;
            for (RvId other : pending) {
                if (other != cand && desc[other].count(cand)) {
                    has_pending_ancestor = true;
                    break;
                }
            }
            if (!has_pending_ancestor) {
                out.push_back(cand);
                pending.erase(pending.begin() + i);
                progressed = true;
                break;
            }
        }
        if (!progressed) throw CycleError("topo_sort: dependency cycle");
    }
    return out;
}

bool SymbolicState::can_swap(RvId x1, RvId x2) const {
    require_bound(*this, x1, "can_swap");
    require_bound(*this, x2, "can_swap");
    std::vector<RvId> par2 = parents(x2);
    if (std::find(par2.begin(), par2.end(), x1) == par2.end()) {
        throw NotParentError(to_string(x1) + " is not a parent of " +
                             to_string(x2));
    }

    // Conservative post-swap graph: both variables gain every parent of
    // either, and the x1 -> x2 edge reverses.
    std::set<RvId> merged;
    for (RvId p : parents(x1)) merged.insert(p);
    for (RvId p : par2) merged.insert(p);
    merged.erase(x1);
    merged.erase(x2);

    std::map<RvId, std::set<RvId>> children;
    for (const auto& [child, dist] : bindings_) {
        if (child == x1 || child == x2) continue;  // in-edges replaced below
        for (const Expr& p : dist.params()) {
            for (RvId y : free_rvs(p)) children[y].insert(child);
        }
    }
    for (RvId p : merged) {
        children[p].insert(x1);
        children[p].insert(x2);
    }
    children[x2].insert(x1);

    // Cycle detection by iterative DFS with colors.
    std::map<RvId, int> color;  // 0 white, 1 gray, 2 black
    std::function<bool(RvId)> has_cycle = [&](RvId u) {
        color[u] = 1;
        for (RvId v : children[u]) {
            int c = color[v];
            if (c == 1) return true;
            if (c == 0 && has_cycle(v)) return true;
        }
        color[u] = 2;
        return false;
    };
    for (const auto& [x, dist] : bindings_) {
        if (color[x] == 0 && has_cycle(x)) return false;
    }
    return true;
}

void SymbolicState::gc(const std::set<RvId>& live) {
    std::set<RvId> keep;
    std::function<void(RvId)> mark = [&](RvId x) {
        if (!keep.insert(x).second) return;
        auto it = bindings_.find(x);
        if (it == bindings_.end()) return;
        for (const Expr& p : it->second.params()) {
            for (RvId y : free_rvs(p)) mark(y);
        }
    };
    for (RvId x : live) {
        if (bindings_.count(x)) mark(x);
    }
    for (auto it = bindings_.begin(); it != bindings_.end();) {
        it = keep.count(it->first) ? std::next(it) : bindings_.erase(it);
    }
}

std::vector<RvId> SymbolicState::domain() const {
    std::vector<RvId> out;
    out.reserve(bindings_.size());
    for (const auto& [x, dist] : bindings_) out.push_back(x);
    return out;
}

void SymbolicState::validate() const {
    for (const auto& [x, dist] : bindings_) {
        for (const Expr& p : dist.params()) {
            for (RvId y : free_rvs(p)) {
                if (!contains(y)) {
                    throw UnboundVariableError("state closure violated at " +
                                               to_string(x));
                }
            }
        }
    }
    // topo_sort over the whole domain throws on cycles.
    topo_sort(domain());
}

std::string SymbolicState::to_dot() const {
    std::string out = "digraph state {\n";
    for (const auto& [x, dist] : bindings_) {
        out += "  " + to_string(x) + " [label=\"" + to_string(x) + " : " +
               to_string(dist) + "\"];\n";
    }
    for (const auto& [x, dist] : bindings_) {
        for (RvId p : parents(x)) {
            out += "  " + to_string(p) + " -> " + to_string(x) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace ssi
