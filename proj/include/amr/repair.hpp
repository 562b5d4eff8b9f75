#pragma once

#include "amr/check.hpp"
#include "amr/ctl.hpp"
#include "amr/kmts.hpp"
#include "amr/ops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amr {

/// A state/formula pair a repaired model must keep satisfying. Constraints
/// are how conjunctions are handled: repairing one conjunct pins the other.
struct Constraint {
    std::string state;
    CtlPtr formula;
};

/// A successful repair: the new model plus the ordered operations applied
/// along the winning branch.
struct RepairedKmts {
    Kmts model;
    std::vector<BasicRepairOp> trace;
};

struct RepairReturn {
    std::optional<RepairedKmts> result;
    std::string failure; // set when result is empty

    bool ok() const { return result.has_value(); }
};

/// Syntax-directed repair of a partial model so that the formula (in
/// positive normal form) becomes true at the state while every constraint
/// stays satisfied. Dispatches on the root connective to the primitive
/// functions below. Returns a failure when no constraint-respecting repair
/// is found; throws std::invalid_argument when the formula already holds or
/// is not in positive normal form.
RepairReturn abstract_repair(const Kmts& m, const std::string& state, const CtlPtr& formula,
                             const std::vector<Constraint>& constraints = {});

// The primitive functions, one per connective. Each enforces the dispatcher
// contract: the formula must have the matching shape and must not already
// hold at the state.
RepairReturn repair_atomic(const Kmts& m, const std::string& state, const CtlPtr& lit,
                           const std::vector<Constraint>& constraints);
RepairReturn repair_or(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_and(const Kmts& m, const std::string& state, const CtlPtr& formula,
                        const std::vector<Constraint>& constraints);
RepairReturn repair_ag(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_ex(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_ax(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_eg(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_af(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_ef(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_au(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);
RepairReturn repair_eu(const Kmts& m, const std::string& state, const CtlPtr& formula,
                       const std::vector<Constraint>& constraints);

/// True when the model satisfies every constraint.
bool satisfies_constraints(const Kmts& m, const std::vector<Constraint>& constraints);

} // namespace amr
