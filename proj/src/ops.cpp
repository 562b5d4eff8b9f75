#include "amr/ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace amr {

std::string to_string(OpKind k) {
    switch (k) {
    case OpKind::AddMust: return "AddMust";
    case OpKind::AddMay: return "AddMay";
    case OpKind::RemoveMust: return "RemoveMust";
    case OpKind::RemoveMay: return "RemoveMay";
    case OpKind::ChangeLabel: return "ChangeLabel";
    case OpKind::AddState: return "AddState";
    case OpKind::RemoveState: return "RemoveState";
    }
    return "?";
}

BasicRepairOp BasicRepairOp::add_must(std::string from, std::string to) {
    return {OpKind::AddMust, std::move(from), std::move(to), "", {}};
}
BasicRepairOp BasicRepairOp::add_may(std::string from, std::string to) {
    return {OpKind::AddMay, std::move(from), std::move(to), "", {}};
}
BasicRepairOp BasicRepairOp::remove_must(std::string from, std::string to) {
    return {OpKind::RemoveMust, std::move(from), std::move(to), "", {}};
}
BasicRepairOp BasicRepairOp::remove_may(std::string from, std::string to) {
    return {OpKind::RemoveMay, std::move(from), std::move(to), "", {}};
}
BasicRepairOp BasicRepairOp::change_label(std::string state, std::vector<Literal> literals) {
    return {OpKind::ChangeLabel, "", "", std::move(state), std::move(literals)};
}
BasicRepairOp BasicRepairOp::add_state(std::string state) {
    return {OpKind::AddState, "", "", std::move(state), {}};
}
BasicRepairOp BasicRepairOp::remove_state(std::string state) {
    return {OpKind::RemoveState, "", "", std::move(state), {}};
}

std::string to_string(const BasicRepairOp& op) {
    switch (op.kind) {
    case OpKind::AddMust:
    case OpKind::AddMay:
    case OpKind::RemoveMust:
    case OpKind::RemoveMay: return to_string(op.kind) + "(" + op.from + ", " + op.to + ")";
    case OpKind::ChangeLabel: {
        std::string lits;
        for (const auto& l : op.literals) {
            if (!lits.empty()) lits += " ";
            lits += to_string(l);
        }
        return "ChangeLabel(" + op.state + ", {" + lits + "})";
    }
    default: return to_string(op.kind) + "(" + op.state + ")";
    }
}

namespace {

struct Parts {
    std::vector<std::string> props, states, initial;
    std::vector<std::pair<std::string, std::string>> must, may;
    std::map<std::string, std::vector<Literal>> labels;
    std::vector<int> sizes;
};

Parts decompose(const Kmts& m) {
    Parts p;
    p.props = m.props();
    p.states = m.states();
    for (int i : m.initial_states()) p.initial.push_back(m.state_name(i));
    for (const auto& [a, b] : m.must()) p.must.emplace_back(m.state_name(a), m.state_name(b));
    for (const auto& [a, b] : m.may()) p.may.emplace_back(m.state_name(a), m.state_name(b));
    for (int i = 0; i < m.state_count(); ++i) p.labels[m.state_name(i)] = m.literals(i);
    p.sizes = m.concrete_sizes();
    return p;
}

Kmts rebuild(Parts p) {
    return Kmts(std::move(p.props), std::move(p.states), std::move(p.initial), std::move(p.must),
                std::move(p.may), std::move(p.labels), std::move(p.sizes));
}

void erase_edge(std::vector<std::pair<std::string, std::string>>& edges,
                const std::pair<std::string, std::string>& e) {
    edges.erase(std::remove(edges.begin(), edges.end(), e), edges.end());
}

[[noreturn]] void reject(const BasicRepairOp& op, const std::string& why) {
    throw std::invalid_argument(to_string(op) + " is not applicable: " + why);
}

} // namespace

Kmts apply_basic_op(const Kmts& m, const BasicRepairOp& op) {
    Parts p = decompose(m);
    switch (op.kind) {
    case OpKind::AddMust: {
        int a = m.index_of(op.from), b = m.index_of(op.to);
        if (m.has_must(a, b)) reject(op, "the must-transition already exists");
        p.must.emplace_back(op.from, op.to);
        if (!m.has_may(a, b)) p.may.emplace_back(op.from, op.to);
        break;
    }
    case OpKind::AddMay: {
        int a = m.index_of(op.from), b = m.index_of(op.to);
        if (m.has_may(a, b)) reject(op, "the may-transition already exists");
        p.may.emplace_back(op.from, op.to);
        if (m.concrete_size(a) == 1) p.must.emplace_back(op.from, op.to);
        break;
    }
    case OpKind::RemoveMust: {
        int a = m.index_of(op.from), b = m.index_of(op.to);
        if (!m.has_must(a, b)) reject(op, "no such must-transition");
        erase_edge(p.must, {op.from, op.to});
        if (m.concrete_size(a) == 1) erase_edge(p.may, {op.from, op.to});
        break;
    }
    case OpKind::RemoveMay: {
        int a = m.index_of(op.from), b = m.index_of(op.to);
        if (!m.has_may(a, b)) reject(op, "no such may-transition");
        erase_edge(p.may, {op.from, op.to});
        erase_edge(p.must, {op.from, op.to});
        break;
    }
    case OpKind::ChangeLabel: {
        int s = m.index_of(op.state);
        for (const auto& l1 : op.literals)
            for (const auto& l2 : op.literals)
                if (l1.prop == l2.prop && l1.negated != l2.negated)
                    reject(op, "contradictory literals for " + l1.prop);
        auto& lits = p.labels[m.state_name(s)];
        for (const auto& l : op.literals) {
            lits.erase(std::remove(lits.begin(), lits.end(), l.complement()), lits.end());
            if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
        }
        break;
    }
    case OpKind::AddState: {
        if (m.has_state(op.state)) reject(op, "state id already in use");
        if (!is_valid_identifier(op.state)) reject(op, "invalid state id");
        p.states.push_back(op.state);
        p.labels[op.state] = {};
        p.sizes.push_back(1);
        break;
    }
    case OpKind::RemoveState: {
        int s = m.index_of(op.state);
        for (const auto& [a, b] : m.may())
            if (a == s || b == s) reject(op, "state is not isolated");
        int pos = s;
        p.states.erase(p.states.begin() + pos);
        p.sizes.erase(p.sizes.begin() + pos);
        p.labels.erase(op.state);
        p.initial.erase(std::remove(p.initial.begin(), p.initial.end(), op.state), p.initial.end());
        break;
    }
    }
    return rebuild(std::move(p));
}

int op_tier(OpKind k) {
    switch (k) {
    case OpKind::AddMay:
    case OpKind::AddState: return 0;
    case OpKind::RemoveMay: return 2;
    default: return 1;
    }
}

bool op_precedes(OpKind a, OpKind b) { return op_tier(a) < op_tier(b); }

std::vector<OpKind> op_preference_order() {
    std::vector<OpKind> kinds{OpKind::AddMust,    OpKind::AddMay,      OpKind::RemoveMust,
                              OpKind::RemoveMay,  OpKind::ChangeLabel, OpKind::AddState,
                              OpKind::RemoveState};
    std::stable_sort(kinds.begin(), kinds.end(), [](OpKind a, OpKind b) {
        if (op_tier(a) != op_tier(b)) return op_tier(a) < op_tier(b);
        return to_string(a) < to_string(b);
    });
    return kinds;
}

} // namespace amr
