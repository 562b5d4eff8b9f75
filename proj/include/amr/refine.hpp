#pragma once

#include "amr/abstraction.hpp"
#include "amr/check.hpp"
#include "amr/ctl.hpp"
#include "amr/kmts.hpp"
#include "amr/kripke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amr {

/// The cause recorded by check3 for an unknown verdict; errors if the
/// verdict was definite.
FailureCause find_failure(const Kmts& m, const CheckResult& result);

/// Splits the failure state's block in two:
///  - unknown literal: members where the proposition holds (suffix 1)
///    versus members where it does not (suffix 2);
///  - unconfirmed transition: members with no successor in the target block
///    (suffix 1) versus members with at least one (suffix 2).
/// Both sides are nonempty for causes produced by genuine abstractions.
/// Throws std::runtime_error when the block is a singleton and cannot split.
AbstractionMap split(const KripkeStructure& m, const AbstractionMap& p, const Kmts& abs,
                     const FailureCause& cause);

struct RefinementStep {
    AbstractionMap partition;
    Tv verdict;
    std::optional<FailureCause> cause;
};

struct RefinementResult {
    Kmts kmts;
    AbstractionMap partition;
    Tv verdict = Tv::U;           // final verdict; U only on failure
    int refinements = 0;
    bool failed = false;          // no further split possible
    std::string failure_reason;
    std::vector<RefinementStep> steps; // one per checked abstraction
};

/// Abstract, check, split and repeat until the verdict is definite or no
/// split is possible. Terminates within |S| - |p0| iterations.
RefinementResult refine_until_definite(const KripkeStructure& m, const AbstractionMap& p0,
                                       const std::string& state, const CtlPtr& formula);

} // namespace amr
