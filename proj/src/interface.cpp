// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#include "ssi/interface.hpp"

#include <algorithm>
#include <set>

#include "ssi/conjugacy.hpp"
#include "ssi/error.hpp"

namespace ssi {

namespace {

// Control-flow signal raised when a swap finds no closed form. Caught by
// hoist, never surfaces to callers.
struct NonConjugate {
    RvId parent;
    RvId child;
};

void trace_swap(Trace* t, RvId x1, RvId x2, bool ok) {
    if (!t) return;
    ++t->swap_attempts;
    t->log("swap " + to_string(x1) + " " + to_string(x2) +
           (ok ? " -> ok" : " -> none"));
}

void hoist_helper(RvId x_cur, const std::set<RvId>& roots, SymbolicState& g,
                  Trace* trace) {
    // Folding the parameters first eliminates references to point-mass
    // variables, so the parent list below only carries genuine dependencies.
    g.eval_star(x_cur);
    std::vector<RvId> parents = g.topo_sort(g.parents(x_cur));

    std::set<RvId> roots_acc = roots;
    for (RvId x_par : parents) {
        if (roots.count(x_par)) continue;
        hoist_helper(x_par, roots_acc, g, trace);
        roots_acc.insert(x_par);
    }

    for (auto it = parents.rbegin(); it != parents.rend(); ++it) {
        RvId x_par = *it;
        if (roots.count(x_par)) continue;
        if (!g.can_swap(x_par, x_cur)) {
            throw InternalCycleError("hoist: can_swap rejected " +
                                     to_string(x_par) + " -> " +
                                     to_string(x_cur));
        }
        bool conjugate = swap(x_par, x_cur, g);
        trace_swap(trace, x_par, x_cur, conjugate);
        if (!conjugate) throw NonConjugate{x_par, x_cur};
    }
}

}  // namespace

void hoist(RvId x, SymbolicState& g, RandomSource& rng, Trace* trace) {
    for (;;) {
        try {
            hoist_helper(x, {}, g, trace);
            return;
        } catch (const NonConjugate& blocked) {
            // No conjugacy available: sample the blocking parent, fold it
            // out of the child, and restart from scratch.
            value(blocked.parent, g, rng, trace);
            g.eval_star(blocked.child);
        }
    }
}

double value(RvId x, SymbolicState& g, RandomSource& rng, Trace* trace) {
    hoist(x, g, rng, trace);
    g.eval_star(x);
    ClosedDist d = close(g.at(x), g);
    double v = draw(d, rng);
    if (d.kind() != DistKind::delta) {
        // Point masses replay deterministically; only genuine sampling
        // counts against the exactness instrumentation.
        g.count_draw();
    }
    if (trace) {
        trace->log("value " + to_string(x) + " = " + format_number(v));
    }
    g.intervene(x, v);
    if (trace) trace->log("intervene " + to_string(x) + " = " + format_number(v));
    return v;
}

double observe(RvId x, double v, SymbolicState& g, RandomSource& rng,
               Trace* trace) {
    hoist(x, g, rng, trace);
    g.eval_star(x);
    double s = score(close(g.at(x), g), v);
    g.intervene(x, v);
    if (trace) {
        trace->log("observe " + to_string(x) + " = " + format_number(v) +
                   " logw " + format_number(s));
    }
    return s;
}

ClosedDist marginal_of(const Expr& v, const SymbolicState& g,
                       RandomSource& rng, Trace* trace) {
    if (v.is_const()) return ClosedDist::delta(v.const_value());
    if (v.is_var()) {
        SymbolicState copy = g;
        RvId x = v.var_id();
        hoist(x, copy, rng, trace);
        copy.eval_star(x);
        return close(copy.at(x), copy);
    }
    throw UnsupportedError("marginal of composite expression " + to_string(v));
}

}  // namespace ssi
