#include "amr/check.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <stdexcept>

namespace amr {

std::string to_string(Tv v) {
    switch (v) {
    case Tv::T: return "true";
    case Tv::F: return "false";
    default: return "undefined";
    }
}

namespace {

// Subformulas in preorder, with child links by index.
struct SubformulaIndex {
    std::vector<CtlPtr> nodes;
    std::vector<int> left;
    std::vector<int> right;

    int add(const CtlPtr& f) {
        int id = static_cast<int>(nodes.size());
        nodes.push_back(f);
        left.push_back(-1);
        right.push_back(-1);
        if (f->left) left[id] = add(f->left);
        if (f->right) right[id] = add(f->right);
        return id;
    }
};

// One 2-valued pass: which relation each quantifier ranges over and how
// literals evaluate.
struct PassGraph {
    const std::vector<std::vector<int>>* univ;
    const std::vector<std::vector<int>>* exist;
    std::function<bool(int, const Literal&)> lit;
};

class Evaluator {
public:
    Evaluator(const SubformulaIndex& ix, int n, PassGraph pess, PassGraph opt)
        : ix_(ix), n_(n), graphs_{std::move(pess), std::move(opt)} {
        memo_[0].resize(ix.nodes.size());
        memo_[1].resize(ix.nodes.size());
    }

    const std::vector<char>& table(int node, int pass) {
        auto& slot = memo_[pass][node];
        if (!slot.empty()) return slot;
        slot = compute(node, pass);
        return slot;
    }

private:
    std::vector<char> compute(int node, int pass) {
        using K = CtlKind;
        const CtlFormula& f = *ix_.nodes[node];
        const PassGraph& g = graphs_[pass];
        std::vector<char> v(n_, 0);
        switch (f.kind) {
        case K::True: std::fill(v.begin(), v.end(), 1); break;
        case K::False: break;
        case K::Lit:
            for (int s = 0; s < n_; ++s) v[s] = g.lit(s, f.lit);
            break;
        case K::Not: {
            const auto& sub = table(ix_.left[node], 1 - pass);
            for (int s = 0; s < n_; ++s) v[s] = !sub[s];
            break;
        }
        case K::And:
        case K::Or: {
            const auto& a = table(ix_.left[node], pass);
            const auto& b = table(ix_.right[node], pass);
            for (int s = 0; s < n_; ++s)
                v[s] = f.kind == K::And ? (a[s] && b[s]) : (a[s] || b[s]);
            break;
        }
        case K::AX: {
            const auto& sub = table(ix_.left[node], pass);
            for (int s = 0; s < n_; ++s) v[s] = all_of_succ((*g.univ)[s], sub);
            break;
        }
        case K::EX: {
            const auto& sub = table(ix_.left[node], pass);
            for (int s = 0; s < n_; ++s) v[s] = any_of_succ((*g.exist)[s], sub);
            break;
        }
        case K::AG: {
            const auto& sub = table(ix_.left[node], pass);
            v = sub;
            gfp([&](int s) { return sub[s] && all_of_succ((*g.univ)[s], v); }, v);
            break;
        }
        case K::EG: {
            const auto& sub = table(ix_.left[node], pass);
            v = sub;
            gfp([&](int s) {
                return sub[s] && ((*g.exist)[s].empty() || any_of_succ((*g.exist)[s], v));
            }, v);
            break;
        }
        case K::AF: {
            const auto& sub = table(ix_.left[node], pass);
            lfp([&](int s) {
                return sub[s] || (!(*g.univ)[s].empty() && all_of_succ((*g.univ)[s], v));
            }, v);
            break;
        }
        case K::EF: {
            const auto& sub = table(ix_.left[node], pass);
            lfp([&](int s) { return sub[s] || any_of_succ((*g.exist)[s], v); }, v);
            break;
        }
        case K::AU: {
            const auto& a = table(ix_.left[node], pass);
            const auto& b = table(ix_.right[node], pass);
            lfp([&](int s) {
                return b[s] || (a[s] && !(*g.univ)[s].empty() && all_of_succ((*g.univ)[s], v));
            }, v);
            break;
        }
        case K::EU: {
            const auto& a = table(ix_.left[node], pass);
            const auto& b = table(ix_.right[node], pass);
            lfp([&](int s) { return b[s] || (a[s] && any_of_succ((*g.exist)[s], v)); }, v);
            break;
        }
        }
        return v;
    }

    static bool all_of_succ(const std::vector<int>& succ, const std::vector<char>& v) {
        return std::all_of(succ.begin(), succ.end(), [&](int t) { return v[t]; });
    }
    static bool any_of_succ(const std::vector<int>& succ, const std::vector<char>& v) {
        return std::any_of(succ.begin(), succ.end(), [&](int t) { return v[t]; });
    }

    void lfp(const std::function<bool(int)>& step, std::vector<char>& v) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < n_; ++s) {
                if (!v[s] && step(s)) {
                    v[s] = 1;
                    changed = true;
                }
            }
        }
    }

    void gfp(const std::function<bool(int)>& step, std::vector<char>& v) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 0; s < n_; ++s) {
                if (v[s] && !step(s)) {
                    v[s] = 0;
                    changed = true;
                }
            }
        }
    }

    const SubformulaIndex& ix_;
    int n_;
    PassGraph graphs_[2];
    std::vector<std::vector<char>> memo_[2];
};

// ---------------------------------------------------------------------------
// Cause extraction for unknown verdicts.

struct Explainer {
    const Kmts& m;
    const SubformulaIndex& ix;
    const std::vector<std::vector<Tv>>& values;

    Tv val(int node, int s) const { return values[node][s]; }

    bool may_only(int a, int b) const { return m.has_may(a, b) && !m.has_must(a, b); }

    FailureCause explain(int node, int s) const {
        using K = CtlKind;
        const CtlFormula& f = *ix.nodes[node];
        assert(val(node, s) == Tv::U);
        switch (f.kind) {
        case K::Lit: return FailureCause{FailureCause::UnknownLiteral, s, f.lit.prop, -1};
        case K::Not: return explain(ix.left[node], s);
        case K::And:
        case K::Or:
            if (val(ix.left[node], s) == Tv::U) return explain(ix.left[node], s);
            return explain(ix.right[node], s);
        case K::EX:
            for (int t : m.may_successors(s)) {
                if (val(ix.left[node], t) == Tv::T && may_only(s, t))
                    return FailureCause{FailureCause::MayNotMust, s, "", t};
                if (val(ix.left[node], t) == Tv::U) return explain(ix.left[node], t);
            }
            break;
        case K::AX:
            for (int t : m.may_successors(s)) {
                if (val(ix.left[node], t) == Tv::F && may_only(s, t))
                    return FailureCause{FailureCause::MayNotMust, s, "", t};
                if (val(ix.left[node], t) == Tv::U) return explain(ix.left[node], t);
            }
            break;
        case K::AG: return explain_reach(node, s, Tv::F);
        case K::EF: return explain_reach(node, s, Tv::T);
        case K::EG: {
            auto path = path_within(s, [&](int t) { return val(ix.left[node], t) != Tv::F; });
            if (path) return explain_path(*path, {ix.left[node]});
            break;
        }
        case K::AF: {
            auto path = path_within(s, [&](int t) { return val(ix.left[node], t) != Tv::T; });
            if (path) return explain_path(*path, {ix.left[node]});
            break;
        }
        case K::AU: {
            int a = ix.left[node], b = ix.right[node];
            // A prefix that breaks the until, or a path where it never fires.
            auto prefix = reach_within(
                s, [&](int t) { return val(b, t) != Tv::T; },
                [&](int t) { return val(a, t) != Tv::T && val(b, t) != Tv::T; });
            if (prefix) return explain_path(*prefix, {b, a});
            auto path = path_within(
                s, [&](int t) { return val(a, t) != Tv::F && val(b, t) != Tv::T; });
            if (path) return explain_path(*path, {b, a});
            break;
        }
        case K::EU: {
            int a = ix.left[node], b = ix.right[node];
            auto prefix = reach_within(s, [&](int t) { return val(a, t) != Tv::F; },
                                       [&](int t) { return val(b, t) != Tv::F; });
            if (prefix) return explain_path(*prefix, {b, a});
            break;
        }
        default: break;
        }
        throw std::logic_error("no failure cause found for an unknown verdict");
    }

    // Breadth-first over may-transitions; the first reachable state where the
    // operand is `bad` pins the cause, either directly (operand unknown) or
    // through the first unconfirmed transition on the way there.
    FailureCause explain_reach(int node, int s, Tv definite) const {
        int child = ix.left[node];
        auto [order, parent] = bfs_may(s);
        for (int t : order) {
            if (val(child, t) == Tv::U) return explain(child, t);
            if (val(child, t) == definite) {
                std::vector<int> path = unwind(parent, s, t);
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    if (may_only(path[i], path[i + 1]))
                        return FailureCause{FailureCause::MayNotMust, path[i], "", path[i + 1]};
            }
        }
        throw std::logic_error("no failure cause found for an unknown verdict");
    }

    // Walks a witness path; the first unknown operand value or unconfirmed
    // transition along it is the cause.
    FailureCause explain_path(const std::vector<int>& path, std::vector<int> operands) const {
        for (size_t i = 0; i < path.size(); ++i) {
            for (int op : operands)
                if (val(op, path[i]) == Tv::U) return explain(op, path[i]);
            if (i + 1 < path.size() && may_only(path[i], path[i + 1]))
                return FailureCause{FailureCause::MayNotMust, path[i], "", path[i + 1]};
        }
        throw std::logic_error("no failure cause found for an unknown verdict");
    }

    std::pair<std::vector<int>, std::vector<int>> bfs_may(int s) const {
        std::vector<int> order, parent(m.state_count(), -2);
        std::deque<int> q{s};
        parent[s] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            order.push_back(u);
            for (int t : m.may_successors(u)) {
                if (parent[t] == -2) {
                    parent[t] = u;
                    q.push_back(t);
                }
            }
        }
        return {order, parent};
    }

    static std::vector<int> unwind(const std::vector<int>& parent, int s, int t) {
        std::vector<int> path;
        for (int u = t; u != -1; u = parent[u]) path.push_back(u);
        std::reverse(path.begin(), path.end());
        assert(path.front() == s);
        return path;
    }

    // First path (successors in declared order) from s over may-transitions
    // that stays in `keep` and is maximal: it ends in a state with no
    // successors at all, or closes a cycle inside `keep`.
    std::optional<std::vector<int>> path_within(int s, const std::function<bool(int)>& keep) const {
        if (!keep(s)) return std::nullopt;
        std::vector<int> path{s};
        std::vector<char> on_path(m.state_count(), 0);
        on_path[s] = 1;
        std::function<std::optional<std::vector<int>>()> dfs =
            [&]() -> std::optional<std::vector<int>> {
            int u = path.back();
            const auto& succ = m.may_successors(u);
            if (succ.empty()) return path;
            for (int t : succ) {
                if (on_path[t]) {
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

    // BFS from s through may-transitions restricted to `through`, returning
    // the first path that ends in a `target` state.
    std::optional<std::vector<int>> reach_within(int s, const std::function<bool(int)>& through,
                                                 const std::function<bool(int)>& target) const {
        if (target(s)) return std::vector<int>{s};
        if (!through(s)) return std::nullopt;
        std::vector<int> parent(m.state_count(), -2);
        parent[s] = -1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int t : m.may_successors(u)) {
                if (parent[t] != -2) continue;
                parent[t] = u;
                if (target(t)) return unwind(parent, s, t);
                if (through(t)) q.push_back(t);
            }
        }
        return std::nullopt;
    }
};

} // namespace

Tv check3(const Kmts& m, int state, const CtlPtr& formula, CheckResult* result) {
    if (state < 0 || state >= m.state_count()) throw std::invalid_argument("state index out of range");
    SubformulaIndex ix;
    ix.add(formula);
    int n = m.state_count();

    // Universal operators range over may in the pessimistic pass; the
    // optimistic pass swaps the relations and resolves unknown literals in
    // the formula's favor.
    auto may_adj = [&m]() {
        std::vector<std::vector<int>> adj(m.state_count());
        for (int i = 0; i < m.state_count(); ++i) adj[i] = m.may_successors(i);
        return adj;
    }();
    auto must_adj = [&m]() {
        std::vector<std::vector<int>> adj(m.state_count());
        for (int i = 0; i < m.state_count(); ++i) adj[i] = m.must_successors(i);
        return adj;
    }();

    PassGraph pess_graph{&may_adj, &must_adj,
                         [&m](int s, const Literal& lit) { return m.has_literal(s, lit); }};
    PassGraph opt_graph{&must_adj, &may_adj, [&m](int s, const Literal& lit) {
                            return !m.has_literal(s, lit.complement());
                        }};

    Evaluator ev(ix, n, pess_graph, opt_graph);
    std::vector<std::vector<Tv>> values(ix.nodes.size(), std::vector<Tv>(n));
    for (size_t i = 0; i < ix.nodes.size(); ++i) {
        const auto& p = ev.table(static_cast<int>(i), 0);
        const auto& o = ev.table(static_cast<int>(i), 1);
        for (int s = 0; s < n; ++s) {
            assert(!p[s] || o[s]);
            values[i][s] = p[s] ? Tv::T : (!o[s] ? Tv::F : Tv::U);
        }
    }

    Tv verdict = values[0][state];
    if (result) {
        result->subformulas = ix.nodes;
        result->values = values;
        result->verdict = verdict;
        result->target = state;
        result->cause.reset();
        if (verdict == Tv::U) {
            Explainer ex{m, ix, values};
            result->cause = ex.explain(0, state);
        }
    }
    return verdict;
}

Tv check3(const Kmts& m, const std::string& state, const CtlPtr& formula, CheckResult* result) {
    return check3(m, m.index_of(state), formula, result);
}

bool check2(const KripkeStructure& m, int state, const CtlPtr& formula) {
    if (state < 0 || state >= m.state_count()) throw std::invalid_argument("state index out of range");
    SubformulaIndex ix;
    ix.add(formula);
    std::vector<std::vector<int>> adj(m.state_count());
    for (int i = 0; i < m.state_count(); ++i) adj[i] = m.successors(i);
    auto lit = [&m](int s, const Literal& l) { return m.has_literal(s, l); };
    PassGraph g{&adj, &adj, lit};
    Evaluator ev(ix, m.state_count(), g, g);
    return ev.table(0, 0)[state] != 0;
}

bool check2(const KripkeStructure& m, const std::string& state, const CtlPtr& formula) {
    return check2(m, m.index_of(state), formula);
}

namespace {

void collect_paths(const Kmts& m, PathMode mode, std::vector<int>& path,
                   std::set<std::pair<int, int>>& used, std::vector<std::vector<int>>& out) {
    int u = path.back();
    const auto& succ = mode == PathMode::Must ? m.must_successors(u) : m.may_successors(u);
    bool extended = false;
    for (int t : succ) {
        if (used.count({u, t})) continue;
        used.insert({u, t});
        path.push_back(t);
        collect_paths(m, mode, path, used, out);
        path.pop_back();
        used.erase({u, t});
        extended = true;
    }
    if (!extended) out.push_back(path);
}

} // namespace

std::vector<std::vector<int>> maximal_paths(const Kmts& m, int from, PathMode mode) {
    if (from < 0 || from >= m.state_count()) throw std::invalid_argument("state index out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> path{from};
    std::set<std::pair<int, int>> used;
    collect_paths(m, mode, path, used, out);
    return out;
}

std::vector<std::vector<int>> maximal_paths(const Kmts& m, const std::string& from, PathMode mode) {
    return maximal_paths(m, m.index_of(from), mode);
}

} // namespace amr
