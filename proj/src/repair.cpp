#include "amr/repair.hpp"

#include "amr/metrics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace amr {

bool satisfies_constraints(const Kmts& m, const std::vector<Constraint>& constraints) {
    for (const auto& c : constraints) {
        if (!m.has_state(c.state)) return false;
        if (check3(m, c.state, c.formula) != Tv::T) return false;
    }
    return true;
}

namespace {

using Cand = RepairedKmts;
using Result = std::optional<Cand>;

struct Ctx {
    int depth = 0;
    long work = 0;
    int next_fresh = 0;
    std::string diag;

    bool spend(long units = 1) {
        work -= units;
        return work >= 0;
    }
    std::string fresh_id() { return "_n" + std::to_string(next_fresh++); }
};

Result fail(Ctx& ctx, const std::string& why) {
    if (ctx.diag.empty()) ctx.diag = why;
    return std::nullopt;
}

Tv value_at(const Kmts& m, const std::string& state, const CtlPtr& f) {
    return check3(m, state, f);
}

bool sat(const Kmts& m, const std::string& state, const CtlPtr& f) {
    return value_at(m, state, f) == Tv::T;
}

Cand applied(const Cand& c, const BasicRepairOp& op) {
    Cand out{apply_basic_op(c.model, op), c.trace};
    out.trace.push_back(op);
    return out;
}

Result repair_rec(const Cand& cur, const std::string& state, const CtlPtr& f,
                  const std::vector<Constraint>& cons, Ctx& ctx);

// --- shared path utilities ------------------------------------------------

// First maximal path over `mode` from `from` whose states all satisfy
// `keep`: it ends at a state with no successors at all or closes a cycle.
// `skip` ignores that many matches first, giving a deterministic enumeration.
std::optional<std::vector<int>> path_within(const Kmts& m, int from, PathMode mode,
                                            const std::function<bool(int)>& keep, int skip = 0) {
    if (!keep(from)) return std::nullopt;
    std::vector<int> path{from};
    std::vector<char> on_path(m.state_count(), 0);
    on_path[from] = 1;
    std::function<std::optional<std::vector<int>>()> dfs = [&]() -> std::optional<std::vector<int>> {
        int u = path.back();
        const auto& succ = mode == PathMode::Must ? m.must_successors(u) : m.may_successors(u);
        if (succ.empty()) {
            if (skip-- > 0) return std::nullopt;
            return path;
        }
        for (int t : succ) {
            if (on_path[t]) {
                if (skip-- > 0) continue;
                auto full = path;
                full.push_back(t);
                return full;
            }
            if (!keep(t)) continue;
            path.push_back(t);
            on_path[t] = 1;
            if (auto r = dfs()) return r;
            on_path[t] = 0;
            path.pop_back();
        }
        return std::nullopt;
    };
    return dfs();
}

// Breadth-first path from `from` through states satisfying `through`, ending
// at the first state satisfying `target` (which needs not satisfy `through`).
std::optional<std::vector<int>> bfs_path(const Kmts& m, int from, PathMode mode,
                                         const std::function<bool(int)>& through,
                                         const std::function<bool(int)>& target) {
    if (target(from)) return std::vector<int>{from};
    if (!through(from)) return std::nullopt;
    std::vector<int> parent(m.state_count(), -2);
    parent[from] = -1;
    std::deque<int> q{from};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        const auto& succ = mode == PathMode::Must ? m.must_successors(u) : m.may_successors(u);
        for (int t : succ) {
            if (parent[t] != -2) continue;
            parent[t] = u;
            if (target(t)) {
                std::vector<int> path;
                for (int x = t; x != -1; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (through(t)) q.push_back(t);
        }
    }
    return std::nullopt;
}

std::vector<int> reachable(const Kmts& m, int from, PathMode mode) {
    std::vector<int> order;
    std::vector<char> seen(m.state_count(), 0);
    std::deque<int> q{from};
    seen[from] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        order.push_back(u);
        const auto& succ = mode == PathMode::Must ? m.must_successors(u) : m.may_successors(u);
        for (int t : succ)
            if (!seen[t]) {
                seen[t] = 1;
                q.push_back(t);
            }
    }
    return order;
}

std::vector<std::string> names_of(const Kmts& m, const std::vector<int>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(m.state_name(i));
    return out;
}

Cand pick_minimal(const Kmts& base, Cand a, Cand b) {
    // Ties go to the first candidate.
    return distance_kmts(base, b.model) < distance_kmts(base, a.model) ? std::move(b) : std::move(a);
}

// --- primitive functions ----------------------------------------------------

Result prim_atomic(const Cand& cur, const std::string& state, const CtlPtr& f,
                   const std::vector<Constraint>& cons, Ctx& ctx) {
    Literal lit = f->kind == CtlKind::Not ? f->left->lit.complement() : f->lit;
    Cand next = applied(cur, BasicRepairOp::change_label(state, {lit}));
    if (satisfies_constraints(next.model, cons)) return next;
    return fail(ctx, "relabeling " + state + " violates a constraint");
}

Result prim_or(const Cand& cur, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    Result r1 = repair_rec(cur, state, f->left, cons, ctx);
    Result r2 = repair_rec(cur, state, f->right, cons, ctx);
    if (r1 && r2) return pick_minimal(cur.model, std::move(*r1), std::move(*r2));
    if (r1) return r1;
    if (r2) return r2;
    return fail(ctx, "both disjuncts are unrepairable");
}

Result prim_and(const Cand& cur, const std::string& state, const CtlPtr& f,
                const std::vector<Constraint>& cons, Ctx& ctx) {
    Result r1 = repair_rec(cur, state, f->left, cons, ctx);
    Result r2 = repair_rec(cur, state, f->right, cons, ctx);
    auto c1 = cons;
    c1.push_back({state, f->left});
    auto c2 = cons;
    c2.push_back({state, f->right});
    Result r1p, r2p;
    if (r1) r1p = repair_rec(*r1, state, f->right, c1, ctx);
    if (r2) r2p = repair_rec(*r2, state, f->left, c2, ctx);
    if (r1p && r2p) return pick_minimal(cur.model, std::move(*r1p), std::move(*r2p));
    if (r1p) return r1p;
    if (r2p) return r2p;
    return fail(ctx, "no model satisfies both conjuncts");
}

Result prim_ag(const Cand& cur0, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& sub = f->left;
    Cand cur = cur0;
    if (!sat(cur.model, state, sub)) {
        Result r = repair_rec(cur, state, sub, cons, ctx);
        if (!r) return fail(ctx, "operand unrepairable at " + state);
        cur = std::move(*r);
    }
    while (true) {
        if (!ctx.spend()) return fail(ctx, "work budget exhausted");
        // first may-reachable state (declared order per BFS level) where the
        // operand does not hold in the current model
        std::optional<std::string> bad;
        for (int t : reachable(cur.model, cur.model.index_of(state), PathMode::May)) {
            if (!sat(cur.model, cur.model.state_name(t), sub)) {
                bad = cur.model.state_name(t);
                break;
            }
        }
        if (!bad) break;
        Result r = repair_rec(cur, *bad, sub, cons, ctx);
        if (!r) return fail(ctx, "operand unrepairable at " + *bad);
        cur = std::move(*r);
    }
    if (satisfies_constraints(cur.model, cons)) return cur;
    return fail(ctx, "constraints violated after repairing all reachable states");
}

Result prim_ex(const Cand& cur, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& sub = f->left;
    const Kmts& m = cur.model;
    std::vector<std::string> holding;
    for (int t = 0; t < m.state_count(); ++t)
        if (sat(m, m.state_name(t), sub)) holding.push_back(m.state_name(t));

    if (!holding.empty()) {
        for (const auto& t : holding) {
            if (!ctx.spend()) return fail(ctx, "work budget exhausted");
            if (m.has_must(m.index_of(state), m.index_of(t))) continue;
            Cand next = applied(cur, BasicRepairOp::add_must(state, t));
            if (satisfies_constraints(next.model, cons)) return next;
        }
        return fail(ctx, "every new must-transition violates a constraint");
    }
    for (int t : m.must_successors(m.index_of(state))) {
        if (sat(m, m.state_name(t), sub)) continue;
        Result r = repair_rec(cur, m.state_name(t), sub, cons, ctx);
        if (r) return r;
    }
    std::string fresh = ctx.fresh_id();
    Cand next = applied(cur, BasicRepairOp::add_state(fresh));
    next = applied(next, BasicRepairOp::add_must(state, fresh));
    next = applied(next, BasicRepairOp::add_may(fresh, fresh));
    Result r = repair_rec(next, fresh, sub, cons, ctx);
    if (r) return r;
    return fail(ctx, "no repairable successor for the existential step");
}

Result prim_ax(const Cand& cur0, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& sub = f->left;
    // Stage 1: repair the operand at every failing may-successor.
    {
        Cand cur = cur0;
        bool attempted = false, ok = true;
        auto succ = names_of(cur0.model, cur0.model.may_successors(cur0.model.index_of(state)));
        for (const auto& t : succ) {
            if (sat(cur.model, t, sub)) continue;
            attempted = true;
            Result r = repair_rec(cur, t, sub, cons, ctx);
            if (!r) {
                ok = false;
                break;
            }
            cur = std::move(*r);
        }
        if (attempted && ok) return cur;
    }
    // Stage 2: strip the may-transitions into states that fail the operand.
    Cand cur = cur0;
    {
        auto succ = names_of(cur0.model, cur0.model.may_successors(cur0.model.index_of(state)));
        for (const auto& t : succ) {
            if (!ctx.spend()) return fail(ctx, "work budget exhausted");
            if (sat(cur.model, t, sub)) continue;
            cur = applied(cur, BasicRepairOp::remove_may(state, t));
        }
    }
    if (!cur.model.may_successors(cur.model.index_of(state)).empty()) {
        if (satisfies_constraints(cur.model, cons)) return cur;
        return fail(ctx, "stripping unsatisfying successors violates a constraint");
    }
    // No successors remain: reconnect to states satisfying the operand.
    for (int t = 0; t < cur.model.state_count(); ++t) {
        std::string tn = cur.model.state_name(t);
        if (!sat(cur.model, tn, sub)) continue;
        if (!ctx.spend()) return fail(ctx, "work budget exhausted");
        cur = applied(cur, BasicRepairOp::add_may(state, tn));
        if (satisfies_constraints(cur.model, cons)) return cur;
    }
    std::string fresh = ctx.fresh_id();
    Cand next = applied(cur, BasicRepairOp::add_state(fresh));
    if (next.model.may_successors(next.model.index_of(fresh)).empty())
        next = applied(next, BasicRepairOp::add_may(fresh, fresh));
    Result r = repair_rec(next, fresh, sub, cons, ctx);
    if (r) {
        Cand done = applied(*r, BasicRepairOp::add_may(state, fresh));
        if (satisfies_constraints(done.model, cons)) return done;
    }
    return fail(ctx, "no constraint-respecting successor set for the universal step");
}

Result prim_eg(const Cand& cur0, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& sub = f->left;
    Cand m1 = cur0;
    if (!sat(m1.model, state, sub)) {
        Result r = repair_rec(m1, state, sub, cons, ctx);
        if (!r) return fail(ctx, "operand unrepairable at " + state);
        m1 = std::move(*r);
    }
    // Stage 1: hook the state onto an existing all-satisfying must-path.
    {
        const Kmts& m = m1.model;
        auto keeps = [&](int t) { return sat(m, m.state_name(t), sub); };
        for (int head = 0; head < m.state_count(); ++head) {
            if (!keeps(head)) continue;
            if (!path_within(m, head, PathMode::Must, keeps)) continue;
            if (m.has_must(m.index_of(state), head)) continue;
            if (!ctx.spend()) return fail(ctx, "work budget exhausted");
            Cand next = applied(m1, BasicRepairOp::add_must(state, m.state_name(head)));
            if (satisfies_constraints(next.model, cons)) return next;
        }
    }
    // Stage 2: repair the operand along a maximal must-path from the state.
    for (int skip = 0;; ++skip) {
        if (!ctx.spend()) return fail(ctx, "work budget exhausted");
        const Kmts& m = m1.model;
        int s = m.index_of(state);
        auto keep = [&](int t) { return t == s || !sat(m, m.state_name(t), sub); };
        auto path = path_within(m, s, PathMode::Must, keep, skip);
        if (!path) break;
        Cand cur = m1;
        bool ok = true;
        std::set<std::string> done;
        for (int t : *path) {
            std::string tn = m.state_name(t);
            if (!done.insert(tn).second) continue;
            if (sat(cur.model, tn, sub)) continue;
            Result r = repair_rec(cur, tn, sub, cons, ctx);
            if (!r) {
                ok = false;
                break;
            }
            cur = std::move(*r);
        }
        if (ok) return cur;
    }
    // Stage 3: a fresh state satisfying the operand, reached by a must-step.
    std::string fresh = ctx.fresh_id();
    Cand next = applied(m1, BasicRepairOp::add_state(fresh));
    Result r = repair_rec(next, fresh, sub, cons, ctx);
    if (r) {
        Cand done = applied(*r, BasicRepairOp::add_must(state, fresh));
        if (done.model.must_successors(done.model.index_of(fresh)).empty())
            done = applied(done, BasicRepairOp::add_must(fresh, fresh));
        if (satisfies_constraints(done.model, cons)) return done;
    }
    return fail(ctx, "no must-path can be made to satisfy the operand globally");
}

Result prim_af(const Cand& cur0, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& sub = f->left;
    Cand cur = cur0;
    while (true) {
        if (!ctx.spend()) return fail(ctx, "work budget exhausted");
        const Kmts& m = cur.model;
        auto keep = [&](int t) { return !sat(m, m.state_name(t), sub); };
        auto path = path_within(m, m.index_of(state), PathMode::May, keep);
        if (!path) break;
        bool repaired = false;
        std::set<std::string> done;
        for (int t : *path) {
            std::string tn = m.state_name(t);
            if (!done.insert(tn).second) continue;
            Result r = repair_rec(cur, tn, sub, cons, ctx);
            if (r) {
                cur = std::move(*r);
                repaired = true;
                break;
            }
        }
        if (!repaired) return fail(ctx, "an avoiding path has no repairable state");
    }
    return cur;
}

Result prim_ef(const Cand& cur0, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& sub = f->left;
    const Kmts& m = cur0.model;
    int s = m.index_of(state);

    std::vector<std::string> sources{state};
    for (int t : reachable(m, s, PathMode::Must))
        if (t != s && !sat(m, m.state_name(t), sub)) sources.push_back(m.state_name(t));
    std::vector<std::string> holding;
    for (int t = 0; t < m.state_count(); ++t)
        if (sat(m, m.state_name(t), sub)) holding.push_back(m.state_name(t));

    for (const auto& src : sources) {
        for (const auto& dst : holding) {
            if (m.has_must(m.index_of(src), m.index_of(dst))) continue;
            if (!ctx.spend()) return fail(ctx, "work budget exhausted");
            Cand next = applied(cur0, BasicRepairOp::add_must(src, dst));
            if (satisfies_constraints(next.model, cons)) return next;
        }
    }
    for (const auto& src : sources) {
        if (src == state) continue;
        Result r = repair_rec(cur0, src, sub, cons, ctx);
        if (r) return r;
    }
    std::string fresh = ctx.fresh_id();
    Cand next = applied(cur0, BasicRepairOp::add_state(fresh));
    Result r = repair_rec(next, fresh, sub, cons, ctx);
    if (r) {
        for (const auto& src : sources) {
            if (!ctx.spend()) return fail(ctx, "work budget exhausted");
            Cand done = applied(*r, BasicRepairOp::add_must(src, fresh));
            if (done.model.must_successors(done.model.index_of(fresh)).empty())
                done = applied(done, BasicRepairOp::add_must(fresh, fresh));
            if (satisfies_constraints(done.model, cons)) return done;
        }
    }
    return fail(ctx, "no reachable state can be made to satisfy the operand");
}

Result prim_au(const Cand& cur0, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& lhs = f->left;
    const CtlPtr& rhs = f->right;
    Cand cur = cur0;
    if (!sat(cur.model, state, lhs)) {
        Result r = repair_rec(cur, state, lhs, cons, ctx);
        if (!r) return fail(ctx, "left operand unrepairable at " + state);
        cur = std::move(*r);
    }
    while (check3(cur.model, state, f) != Tv::T) {
        if (!ctx.spend()) return fail(ctx, "work budget exhausted");
        const Kmts& m = cur.model;
        int s = m.index_of(state);
        auto v1 = [&](int t) { return sat(m, m.state_name(t), lhs); };
        auto v2 = [&](int t) { return sat(m, m.state_name(t), rhs); };

        // A path breaking the until: left operand states, then a state where
        // both operands fail; or a maximal path where the right operand
        // never fires while the left keeps holding.
        auto witness = bfs_path(m, s, PathMode::May,
                                [&](int t) { return v1(t) && !v2(t); },
                                [&](int t) { return !v1(t) && !v2(t); });
        if (!witness)
            witness = path_within(m, s, PathMode::May, [&](int t) { return v1(t) && !v2(t); });
        if (!witness) return fail(ctx, "no explanation for the unsatisfied until");

        bool repaired = false;
        std::set<int> done;
        for (size_t i = 1; i < witness->size() && !repaired; ++i) {
            int t = (*witness)[i];
            if (!done.insert(t).second || v2(t)) continue;
            Result r = repair_rec(cur, m.state_name(t), rhs, cons, ctx);
            if (r) {
                cur = std::move(*r);
                repaired = true;
            }
        }
        if (!repaired) {
            // The offending path has no interior repair point; give its last
            // state a way to reach the right operand.
            int end = witness->back();
            for (int t : m.may_successors(end)) {
                if (v2(t)) continue;
                Result r = repair_rec(cur, m.state_name(t), rhs, cons, ctx);
                if (r) {
                    cur = std::move(*r);
                    repaired = true;
                    break;
                }
            }
        }
        if (!repaired) {
            int end = witness->back();
            for (int t = 0; t < m.state_count() && !repaired; ++t) {
                if (!v2(t) || m.has_must(end, t)) continue;
                Cand next = applied(cur, BasicRepairOp::add_must(m.state_name(end), m.state_name(t)));
                if (satisfies_constraints(next.model, cons)) {
                    cur = std::move(next);
                    repaired = true;
                }
            }
        }
        if (!repaired) {
            int end = witness->back();
            std::string fresh = ctx.fresh_id();
            Cand next = applied(cur, BasicRepairOp::add_state(fresh));
            Result r = repair_rec(next, fresh, rhs, cons, ctx);
            if (r) {
                Cand done2 = applied(*r, BasicRepairOp::add_must(m.state_name(end), fresh));
                if (done2.model.must_successors(done2.model.index_of(fresh)).empty())
                    done2 = applied(done2, BasicRepairOp::add_must(fresh, fresh));
                if (satisfies_constraints(done2.model, cons)) {
                    cur = std::move(done2);
                    repaired = true;
                }
            }
        }
        if (!repaired) return fail(ctx, "an offending path has no repairable state");
    }
    return cur;
}

Result prim_eu(const Cand& cur0, const std::string& state, const CtlPtr& f,
               const std::vector<Constraint>& cons, Ctx& ctx) {
    const CtlPtr& lhs = f->left;
    const CtlPtr& rhs = f->right;
    Cand m1 = cur0;
    if (!sat(m1.model, state, lhs)) {
        Result r = repair_rec(m1, state, lhs, cons, ctx);
        if (!r) return fail(ctx, "left operand unrepairable at " + state);
        m1 = std::move(*r);
    }
    const Kmts& m = m1.model;
    int s = m.index_of(state);
    auto keeps = [&](int t) { return sat(m, m.state_name(t), lhs); };
    std::vector<std::string> holding;
    for (int t = 0; t < m.state_count(); ++t)
        if (sat(m, m.state_name(t), rhs)) holding.push_back(m.state_name(t));

    for (int skip = 0; !holding.empty(); ++skip) {
        auto path = path_within(m, s, PathMode::Must, keeps, skip);
        if (!path) break;
        int end = path->back();
        for (const auto& dst : holding) {
            if (!ctx.spend()) return fail(ctx, "work budget exhausted");
            if (m.has_must(end, m.index_of(dst))) continue;
            Cand next = applied(m1, BasicRepairOp::add_must(m.state_name(end), dst));
            if (satisfies_constraints(next.model, cons)) return next;
        }
    }
    std::string fresh = ctx.fresh_id();
    Cand next = applied(m1, BasicRepairOp::add_state(fresh));
    Result r = repair_rec(next, fresh, rhs, cons, ctx);
    if (r) {
        Cand done = applied(*r, BasicRepairOp::add_must(state, fresh));
        if (done.model.must_successors(done.model.index_of(fresh)).empty())
            done = applied(done, BasicRepairOp::add_must(fresh, fresh));
        if (satisfies_constraints(done.model, cons)) return done;
    }
    return fail(ctx, "no must-path to the right operand can be established");
}

Result dispatch(const Cand& cur, const std::string& state, const CtlPtr& f,
                const std::vector<Constraint>& cons, Ctx& ctx) {
    using K = CtlKind;
    switch (f->kind) {
    case K::False: return fail(ctx, "false is unrepairable");
    case K::True: return cur; // already satisfied, handled by caller
    case K::Lit: return prim_atomic(cur, state, f, cons, ctx);
    case K::Not:
        if (f->left->kind == K::Lit) return prim_atomic(cur, state, f, cons, ctx);
        throw std::invalid_argument("repair requires positive normal form");
    case K::And: return prim_and(cur, state, f, cons, ctx);
    case K::Or: return prim_or(cur, state, f, cons, ctx);
    case K::AG: return prim_ag(cur, state, f, cons, ctx);
    case K::EX: return prim_ex(cur, state, f, cons, ctx);
    case K::AX: return prim_ax(cur, state, f, cons, ctx);
    case K::EG: return prim_eg(cur, state, f, cons, ctx);
    case K::AF: return prim_af(cur, state, f, cons, ctx);
    case K::EF: return prim_ef(cur, state, f, cons, ctx);
    case K::AU: return prim_au(cur, state, f, cons, ctx);
    case K::EU: return prim_eu(cur, state, f, cons, ctx);
    }
    throw std::logic_error("unreachable");
}

Result repair_rec(const Cand& cur, const std::string& state, const CtlPtr& f,
                  const std::vector<Constraint>& cons, Ctx& ctx) {
    if (ctx.depth <= 0) return fail(ctx, "recursion budget exhausted");
    if (!ctx.spend()) return fail(ctx, "work budget exhausted");
    if (sat(cur.model, state, f)) return cur;
    --ctx.depth;
    Result r = dispatch(cur, state, f, cons, ctx);
    ++ctx.depth;
    if (!r) return r;
    // Results must actually satisfy the formula and the constraints; a
    // branch that cannot is reported as a failure, never returned.
    if (check3(r->model, state, f) != Tv::T)
        return fail(ctx, "candidate does not satisfy the target formula");
    if (!satisfies_constraints(r->model, cons))
        return fail(ctx, "candidate violates a constraint");
    return r;
}

Ctx make_ctx(const Kmts& m, const CtlPtr& f) {
    Ctx ctx;
    ctx.depth = m.state_count() * f->size() + 8;
    ctx.work = 64L * (m.state_count() + 4) * (f->size() + 4) + 256;
    return ctx;
}

RepairReturn run_primitive(const Kmts& m, const std::string& state, const CtlPtr& f,
                           const std::vector<Constraint>& cons,
                           const std::function<Result(const Cand&, Ctx&)>& body) {
    if (!is_pnf(f)) throw std::invalid_argument("formula must be in positive normal form");
    if (check3(m, state, f) == Tv::T)
        throw std::invalid_argument("formula already holds at " + state);
    Ctx ctx = make_ctx(m, f);
    Cand start{m, {}};
    Result r = body(start, ctx);
    if (!r) return {std::nullopt, ctx.diag.empty() ? "no repair found" : ctx.diag};
    if (check3(r->model, state, f) != Tv::T)
        return {std::nullopt, "candidate does not satisfy the target formula"};
    if (!satisfies_constraints(r->model, cons)) return {std::nullopt, "candidate violates a constraint"};
    return {std::move(r), ""};
}

} // namespace

RepairReturn abstract_repair(const Kmts& m, const std::string& state, const CtlPtr& formula,
                             const std::vector<Constraint>& constraints) {
    return run_primitive(m, state, formula, constraints, [&](const Cand& c, Ctx& ctx) {
        return dispatch(c, state, formula, constraints, ctx);
    });
}

#define AMR_PRIMITIVE(name, fn, kind_check)                                                        \
    RepairReturn name(const Kmts& m, const std::string& state, const CtlPtr& f,                    \
                      const std::vector<Constraint>& cons) {                                       \
        if (!(kind_check)) throw std::invalid_argument(#name ": formula has the wrong shape");     \
        return run_primitive(m, state, f, cons,                                                    \
                             [&](const Cand& c, Ctx& ctx) { return fn(c, state, f, cons, ctx); }); \
    }

AMR_PRIMITIVE(repair_atomic, prim_atomic,
              f->kind == CtlKind::Lit || (f->kind == CtlKind::Not && f->left->kind == CtlKind::Lit))
AMR_PRIMITIVE(repair_or, prim_or, f->kind == CtlKind::Or)
AMR_PRIMITIVE(repair_and, prim_and, f->kind == CtlKind::And)
AMR_PRIMITIVE(repair_ag, prim_ag, f->kind == CtlKind::AG)
AMR_PRIMITIVE(repair_ex, prim_ex, f->kind == CtlKind::EX)
AMR_PRIMITIVE(repair_ax, prim_ax, f->kind == CtlKind::AX)
AMR_PRIMITIVE(repair_eg, prim_eg, f->kind == CtlKind::EG)
AMR_PRIMITIVE(repair_af, prim_af, f->kind == CtlKind::AF)
AMR_PRIMITIVE(repair_ef, prim_ef, f->kind == CtlKind::EF)
AMR_PRIMITIVE(repair_au, prim_au, f->kind == CtlKind::AU)
AMR_PRIMITIVE(repair_eu, prim_eu, f->kind == CtlKind::EU)

#undef AMR_PRIMITIVE

} // namespace amr
