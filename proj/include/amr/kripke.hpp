#pragma once

#include "amr/literal.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace amr {

/// A concrete model: finite states, a total transition relation and a total
/// labeling (for every state and proposition exactly one of p, !p).
///
/// States carry stable string ids and every iteration follows the declared
/// order, so all algorithms downstream are deterministic. Values are
/// immutable after construction; edits mean building a new value.
class KripkeStructure {
public:
    KripkeStructure() = default;
    KripkeStructure(std::vector<std::string> props,
                    std::vector<std::string> states,
                    std::vector<std::string> initial,
                    std::vector<std::pair<std::string, std::string>> edges,
                    std::map<std::string, std::vector<Literal>> labels);

    const std::vector<std::string>& props() const { return props_; }
    const std::vector<std::string>& states() const { return states_; }
    int state_count() const { return static_cast<int>(states_.size()); }

    bool has_state(const std::string& id) const;
    /// Throws std::invalid_argument on unknown ids.
    int index_of(const std::string& id) const;
    const std::string& state_name(int i) const { return states_[i]; }

    bool is_initial(int i) const { return initial_[i]; }
    std::vector<int> initial_states() const;

    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& successors(int i) const { return succ_[i]; }
    bool has_edge(int a, int b) const { return edges_.count({a, b}) != 0; }

    /// prop -> truth value; a valid KS has an entry for every declared prop.
    const std::map<std::string, bool>& label(int i) const { return labels_[i]; }
    std::optional<bool> label_value(int i, const std::string& prop) const;
    bool has_literal(int i, const Literal& lit) const;
    std::vector<Literal> literals(int i) const;

    // Raw declarations kept for validation: edges/labels/initials that name
    // undeclared states do not make it into the indexed relation.
    const std::vector<std::pair<std::string, std::string>>& dangling_edges() const { return dangling_edges_; }
    const std::vector<std::string>& dangling_labels() const { return dangling_labels_; }
    const std::vector<std::string>& dangling_initials() const { return dangling_initials_; }
    /// Literal pairs {p, !p} declared on one state (kept out of labels_).
    const std::vector<std::pair<std::string, std::string>>& conflicting_labels() const { return conflicting_labels_; }

    friend bool operator==(const KripkeStructure&, const KripkeStructure&);

private:
    std::vector<std::string> props_;
    std::vector<std::string> states_;
    std::map<std::string, int> index_;
    std::vector<bool> initial_;
    std::set<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::map<std::string, bool>> labels_;

    std::vector<std::pair<std::string, std::string>> dangling_edges_;
    std::vector<std::string> dangling_labels_;
    std::vector<std::string> dangling_initials_;
    std::vector<std::pair<std::string, std::string>> conflicting_labels_;
};

/// Checks every KS invariant; violations are data, not faults.
std::vector<std::string> validate_ks(const KripkeStructure& m);

} // namespace amr
