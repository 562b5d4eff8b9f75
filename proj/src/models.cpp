#include "amr/kmts.hpp"
#include "amr/kripke.hpp"
#include "amr/literal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace amr {

bool is_valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    };
    if (!head(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), tail);
}

bool is_reserved_identifier(const std::string& s) {
    return s.rfind("_n", 0) == 0;
}

std::string to_string(const Literal& lit) {
    return lit.negated ? "!" + lit.prop : lit.prop;
}

namespace {

struct IndexedLabels {
    std::vector<std::map<std::string, bool>> labels;
    std::vector<std::string> dangling;
    std::vector<std::pair<std::string, std::string>> conflicts;
};

IndexedLabels index_labels(const std::map<std::string, int>& index, int n,
                           const std::map<std::string, std::vector<Literal>>& raw) {
    IndexedLabels out;
    out.labels.resize(n);
    for (const auto& [state, lits] : raw) {
        auto it = index.find(state);
        if (it == index.end()) {
            out.dangling.push_back(state);
            continue;
        }
        auto& slot = out.labels[it->second];
        for (const Literal& lit : lits) {
            auto [pos, inserted] = slot.emplace(lit.prop, !lit.negated);
            if (!inserted && pos->second == lit.negated) {
                out.conflicts.emplace_back(state, lit.prop);
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> adjacency(const std::set<std::pair<int, int>>& edges, int n) {
    std::vector<std::vector<int>> succ(n);
    for (const auto& [a, b] : edges) succ[a].push_back(b);
    return succ; // set iteration is already (src, dst) ordered
}

} // namespace

KripkeStructure::KripkeStructure(std::vector<std::string> props,
                                 std::vector<std::string> states,
                                 std::vector<std::string> initial,
                                 std::vector<std::pair<std::string, std::string>> edges,
                                 std::map<std::string, std::vector<Literal>> labels)
    : props_(std::move(props)), states_(std::move(states)) {
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) index_.emplace(states_[i], i);
    initial_.assign(states_.size(), false);
    for (const auto& s : initial) {
        auto it = index_.find(s);
        if (it == index_.end())
            dangling_initials_.push_back(s);
        else
            initial_[it->second] = true;
    }
    for (const auto& e : edges) {
        auto a = index_.find(e.first);
        auto b = index_.find(e.second);
        if (a == index_.end() || b == index_.end())
            dangling_edges_.push_back(e);
        else
            edges_.emplace(a->second, b->second);
    }
    succ_ = adjacency(edges_, state_count());
    auto indexed = index_labels(index_, state_count(), labels);
    labels_ = std::move(indexed.labels);
    dangling_labels_ = std::move(indexed.dangling);
    conflicting_labels_ = std::move(indexed.conflicts);
}

bool KripkeStructure::has_state(const std::string& id) const { return index_.count(id) != 0; }

int KripkeStructure::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown state id: " + id);
    return it->second;
}

std::vector<int> KripkeStructure::initial_states() const {
    std::vector<int> out;
    for (int i = 0; i < state_count(); ++i)
        if (initial_[i]) out.push_back(i);
    return out;
}

std::optional<bool> KripkeStructure::label_value(int i, const std::string& prop) const {
    auto it = labels_[i].find(prop);
    if (it == labels_[i].end()) return std::nullopt;
    return it->second;
}

bool KripkeStructure::has_literal(int i, const Literal& lit) const {
    auto v = label_value(i, lit.prop);
    return v && *v == !lit.negated;
}

std::vector<Literal> KripkeStructure::literals(int i) const {
    std::vector<Literal> out;
    for (const std::string& p : props_) {
        auto v = label_value(i, p);
        if (v) out.emplace_back(p, !*v);
    }
    return out;
}

bool operator==(const KripkeStructure& a, const KripkeStructure& b) {
    return a.props_ == b.props_ && a.states_ == b.states_ && a.initial_ == b.initial_ &&
           a.edges_ == b.edges_ && a.labels_ == b.labels_;
}

std::vector<std::string> validate_ks(const KripkeStructure& m) {
    std::vector<std::string> out;
    for (const auto& p : m.props())
        if (!is_valid_identifier(p)) out.push_back("invalid proposition name '" + p + "'");
    for (const auto& s : m.states())
        if (!is_valid_identifier(s)) out.push_back("invalid state id '" + s + "'");
    for (const auto& s : m.dangling_initials()) out.push_back("initial state '" + s + "' is not declared");
    for (const auto& e : m.dangling_edges())
        out.push_back("transition " + e.first + " -> " + e.second + " references an undeclared state");
    for (const auto& s : m.dangling_labels()) out.push_back("label for undeclared state '" + s + "'");
    for (const auto& [s, p] : m.conflicting_labels())
        out.push_back("state " + s + " is labeled with both " + p + " and !" + p);
    for (int i = 0; i < m.state_count(); ++i) {
        if (m.successors(i).empty())
            out.push_back("transition relation is not total at state " + m.state_name(i));
        for (const auto& p : m.props()) {
            if (!m.label_value(i, p))
                out.push_back("state " + m.state_name(i) + " has no value for proposition " + p);
        }
        for (const auto& [p, v] : m.label(i)) {
            if (std::find(m.props().begin(), m.props().end(), p) == m.props().end())
                out.push_back("state " + m.state_name(i) + " labeled with undeclared proposition " + p);
        }
    }
    return out;
}

Kmts::Kmts(std::vector<std::string> props,
           std::vector<std::string> states,
           std::vector<std::string> initial,
           std::vector<std::pair<std::string, std::string>> must_edges,
           std::vector<std::pair<std::string, std::string>> may_edges,
           std::map<std::string, std::vector<Literal>> labels,
           std::vector<int> concrete_sizes)
    : props_(std::move(props)), states_(std::move(states)) {
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) index_.emplace(states_[i], i);
    initial_.assign(states_.size(), false);
    for (const auto& s : initial) {
        auto it = index_.find(s);
        if (it == index_.end())
            dangling_initials_.push_back(s);
        else
            initial_[it->second] = true;
    }
    auto add_edges = [&](const std::vector<std::pair<std::string, std::string>>& raw,
                         std::set<std::pair<int, int>>& dst) {
        for (const auto& e : raw) {
            auto a = index_.find(e.first);
            auto b = index_.find(e.second);
            if (a == index_.end() || b == index_.end())
                dangling_edges_.push_back(e);
            else
                dst.emplace(a->second, b->second);
        }
    };
    add_edges(must_edges, must_);
    add_edges(may_edges, may_);
    for (const auto& e : must_) {
        if (!may_.count(e)) must_not_may_.push_back(e);
    }
    must_succ_ = adjacency(must_, state_count());
    may_succ_ = adjacency(may_, state_count());
    auto indexed = index_labels(index_, state_count(), labels);
    labels_ = std::move(indexed.labels);
    dangling_labels_ = std::move(indexed.dangling);
    conflicting_labels_ = std::move(indexed.conflicts);
    if (concrete_sizes.empty())
        concrete_sizes_.assign(states_.size(), 1);
    else
        concrete_sizes_ = std::move(concrete_sizes);
    if (concrete_sizes_.size() != states_.size())
        throw std::invalid_argument("concrete_sizes must match the number of states");
}

bool Kmts::has_state(const std::string& id) const { return index_.count(id) != 0; }

int Kmts::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown state id: " + id);
    return it->second;
}

std::vector<int> Kmts::initial_states() const {
    std::vector<int> out;
    for (int i = 0; i < state_count(); ++i)
        if (initial_[i]) out.push_back(i);
    return out;
}

std::optional<bool> Kmts::label_value(int i, const std::string& prop) const {
    auto it = labels_[i].find(prop);
    if (it == labels_[i].end()) return std::nullopt;
    return it->second;
}

bool Kmts::has_literal(int i, const Literal& lit) const {
    auto v = label_value(i, lit.prop);
    return v && *v == !lit.negated;
}

std::vector<Literal> Kmts::literals(int i) const {
    std::vector<Literal> out;
    for (const std::string& p : props_) {
        auto v = label_value(i, p);
        if (v) out.emplace_back(p, !*v);
    }
    return out;
}

bool operator==(const Kmts& a, const Kmts& b) {
    return a.props_ == b.props_ && a.states_ == b.states_ && a.initial_ == b.initial_ &&
           a.must_ == b.must_ && a.may_ == b.may_ && a.labels_ == b.labels_;
}

std::vector<std::string> validate_kmts(const Kmts& m) {
    std::vector<std::string> out;
    for (const auto& p : m.props())
        if (!is_valid_identifier(p)) out.push_back("invalid proposition name '" + p + "'");
    for (const auto& s : m.states())
        if (!is_valid_identifier(s)) out.push_back("invalid state id '" + s + "'");
    for (const auto& s : m.dangling_initials()) out.push_back("initial state '" + s + "' is not declared");
    for (const auto& e : m.dangling_edges())
        out.push_back("transition " + e.first + " -> " + e.second + " references an undeclared state");
    for (const auto& s : m.dangling_labels()) out.push_back("label for undeclared state '" + s + "'");
    for (const auto& [s, p] : m.conflicting_labels())
        out.push_back("state " + s + " is labeled with both " + p + " and !" + p);
    for (const auto& [a, b] : m.must_not_may())
        out.push_back("must-transition " + m.state_name(a) + " -> " + m.state_name(b) +
                      " has no matching may-transition");
    for (int i = 0; i < m.state_count(); ++i) {
        for (const auto& [p, v] : m.label(i)) {
            if (std::find(m.props().begin(), m.props().end(), p) == m.props().end())
                out.push_back("state " + m.state_name(i) + " labeled with undeclared proposition " + p);
        }
    }
    return out;
}

Kmts identity_kmts(const KripkeStructure& m) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : m.edges())
        edges.emplace_back(m.state_name(a), m.state_name(b));
    std::vector<std::string> initial;
    for (int i : m.initial_states()) initial.push_back(m.state_name(i));
    std::map<std::string, std::vector<Literal>> labels;
    for (int i = 0; i < m.state_count(); ++i) labels[m.state_name(i)] = m.literals(i);
    return Kmts(m.props(), m.states(), initial, edges, edges, labels);
}

} // namespace amr
