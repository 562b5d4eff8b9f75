#pragma once

#include "amr/kripke.hpp"
#include "amr/literal.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace amr {

/// A partial model: must-transitions (necessary behavior), may-transitions
/// (possible behavior, a superset of must) and a partial labeling where each
/// proposition is true, false or unknown per state.
class Kmts {
public:
    Kmts() = default;
    Kmts(std::vector<std::string> props,
         std::vector<std::string> states,
         std::vector<std::string> initial,
         std::vector<std::pair<std::string, std::string>> must_edges,
         std::vector<std::pair<std::string, std::string>> may_edges,
         std::map<std::string, std::vector<Literal>> labels,
         std::vector<int> concrete_sizes = {});

    const std::vector<std::string>& props() const { return props_; }
    const std::vector<std::string>& states() const { return states_; }
    int state_count() const { return static_cast<int>(states_.size()); }

    bool has_state(const std::string& id) const;
    int index_of(const std::string& id) const;
    const std::string& state_name(int i) const { return states_[i]; }

    bool is_initial(int i) const { return initial_[i]; }
    std::vector<int> initial_states() const;

    const std::set<std::pair<int, int>>& must() const { return must_; }
    const std::set<std::pair<int, int>>& may() const { return may_; }
    bool has_must(int a, int b) const { return must_.count({a, b}) != 0; }
    bool has_may(int a, int b) const { return may_.count({a, b}) != 0; }
    const std::vector<int>& must_successors(int i) const { return must_succ_[i]; }
    const std::vector<int>& may_successors(int i) const { return may_succ_[i]; }

    const std::map<std::string, bool>& label(int i) const { return labels_[i]; }
    std::optional<bool> label_value(int i, const std::string& prop) const;
    bool has_literal(int i, const Literal& lit) const;
    std::vector<Literal> literals(int i) const;

    /// Number of concrete states this abstract state stands for. Defaults to
    /// 1 for hand-written models and identity views; the abstraction builder
    /// fills in real block sizes. Several repair operations couple their
    /// must/may effect on this count.
    int concrete_size(int i) const { return concrete_sizes_[i]; }
    const std::vector<int>& concrete_sizes() const { return concrete_sizes_; }

    const std::vector<std::pair<std::string, std::string>>& dangling_edges() const { return dangling_edges_; }
    const std::vector<std::string>& dangling_labels() const { return dangling_labels_; }
    const std::vector<std::string>& dangling_initials() const { return dangling_initials_; }
    const std::vector<std::pair<std::string, std::string>>& conflicting_labels() const { return conflicting_labels_; }
    /// Must-edges that were declared without a matching may-edge are kept
    /// here so validation can report them; they are still part of must().
    const std::vector<std::pair<int, int>>& must_not_may() const { return must_not_may_; }

    friend bool operator==(const Kmts&, const Kmts&);

private:
    std::vector<std::string> props_;
    std::vector<std::string> states_;
    std::map<std::string, int> index_;
    std::vector<bool> initial_;
    std::set<std::pair<int, int>> must_;
    std::set<std::pair<int, int>> may_;
    std::vector<std::vector<int>> must_succ_;
    std::vector<std::vector<int>> may_succ_;
    std::vector<std::map<std::string, bool>> labels_;
    std::vector<int> concrete_sizes_;

    std::vector<std::pair<std::string, std::string>> dangling_edges_;
    std::vector<std::string> dangling_labels_;
    std::vector<std::string> dangling_initials_;
    std::vector<std::pair<std::string, std::string>> conflicting_labels_;
    std::vector<std::pair<int, int>> must_not_may_;
};

std::vector<std::string> validate_kmts(const Kmts& m);

/// The singleton-partition view of a concrete model: same states and labels,
/// must = may = R. Baseline for comparing abstract repair against repair
/// directly on the concrete model.
Kmts identity_kmts(const KripkeStructure& m);

} // namespace amr
