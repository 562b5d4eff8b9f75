#pragma once

#include "amr/kmts.hpp"
#include "amr/literal.hpp"

#include <string>
#include <vector>

namespace amr {

enum class OpKind { AddMust, AddMay, RemoveMust, RemoveMay, ChangeLabel, AddState, RemoveState };

std::string to_string(OpKind k);

/// One atomic edit of a partial model. Edge operations name abstract states;
/// ChangeLabel carries the conjunction of literals to impose.
struct BasicRepairOp {
    OpKind kind;
    std::string from, to;          // edge operations
    std::string state;             // ChangeLabel / AddState / RemoveState
    std::vector<Literal> literals; // ChangeLabel

    static BasicRepairOp add_must(std::string from, std::string to);
    static BasicRepairOp add_may(std::string from, std::string to);
    static BasicRepairOp remove_must(std::string from, std::string to);
    static BasicRepairOp remove_may(std::string from, std::string to);
    static BasicRepairOp change_label(std::string state, std::vector<Literal> literals);
    static BasicRepairOp add_state(std::string state);
    static BasicRepairOp remove_state(std::string state);

    friend bool operator==(const BasicRepairOp&, const BasicRepairOp&) = default;
};

std::string to_string(const BasicRepairOp& op);

/// Applies one basic repair operation, including its couplings:
///  - AddMust also inserts the may-transition;
///  - AddMay also inserts a must-transition when the source stands for a
///    single concrete state, and RemoveMust symmetrically also drops the
///    may-transition in that case;
///  - RemoveMay drops the must-transition when present;
///  - AddState yields an isolated, unlabeled, non-initial state;
///  - RemoveState requires the state to be isolated.
/// Throws std::invalid_argument when the operation does not apply.
Kmts apply_basic_op(const Kmts& m, const BasicRepairOp& op);

/// Minimality tier of an operation kind, from the worst-case number of
/// concrete changes one application can imply: 0 for single-change
/// operations (AddMay, AddState), 1 for block-linear ones (AddMust,
/// RemoveMust, ChangeLabel, RemoveState), 2 for RemoveMay which may erase a
/// whole block-to-block edge bundle.
int op_tier(OpKind k);

/// Strict partial order: a precedes b when a's tier guarantees fewer
/// concrete changes. Kinds within a tier are unordered.
bool op_precedes(OpKind a, OpKind b);

/// Total order used when several applicable kinds share a tier: by
/// application cost, then kind name.
std::vector<OpKind> op_preference_order();

} // namespace amr
