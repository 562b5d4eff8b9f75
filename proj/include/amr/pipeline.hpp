#pragma once

#include "amr/abstraction.hpp"
#include "amr/check.hpp"
#include "amr/ctl.hpp"
#include "amr/kripke.hpp"
#include "amr/refine.hpp"
#include "amr/repair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amr {

enum class PipelineStatus {
    NoRepairNeeded,       // the property already holds
    Repaired,             // repaired model(s) produced
    RefinementFailed,     // undefined verdict and no split possible
    RepairFailed,         // the repair algorithm returned no model
    ConcretizationFailed, // no valid concrete model realizes the repair
};

std::string to_string(PipelineStatus s);

struct ConcretizationEntry {
    KripkeStructure model;
    double d = 0;
    bool verified = false; // the property holds in the concrete model
};

struct PipelineTimings {
    double abstraction_ms = 0;
    double refinement_ms = 0;
    double repair_ms = 0;
    double concretization_ms = 0;
    double total_ms = 0;
};

struct PipelineReport {
    PipelineStatus status = PipelineStatus::NoRepairNeeded;
    std::string state;
    std::string formula;
    Tv initial_verdict = Tv::U;
    std::vector<Tv> stage_verdicts; // one per checked abstraction
    int refinements = 0;
    int abstract_states = 0;
    Tv final_abstract_verdict = Tv::U;
    std::vector<BasicRepairOp> trace;
    double d_hat = 0;
    std::optional<Kmts> repaired_kmts;
    AbstractionMap final_partition;
    std::vector<ConcretizationEntry> concretizations; // minimal-distance set
    double min_d = 0;
    std::vector<std::string> notes;
    std::string failure_reason;
    PipelineTimings timings;
};

struct PipelineOptions {
    /// Partition to start from; the label partition when unset.
    std::optional<AbstractionMap> partition;
};

/// The four-step repair process: abstract the model, refine until the check
/// is definite, repair the abstraction when the property fails, then pick
/// the concrete models of minimal distance realizing the repair trace.
PipelineReport run_pipeline(const KripkeStructure& m, const std::string& state,
                            const CtlPtr& formula, const PipelineOptions& options = {});

} // namespace amr
