#pragma once

#include "amr/ctl.hpp"
#include "amr/kripke.hpp"

#include <string>
#include <vector>

namespace amr {

struct BenchRow {
    std::string model;
    int states = 0;
    double concrete_ms = 0; // identity-abstraction baseline
    double amr_ms = 0;      // label-partition abstraction
    double ratio = 0;       // concrete_ms / amr_ms
    double concrete_d = 0;
    double amr_d = 0;
};

/// Runs the repair pipeline twice per model — once on the identity
/// abstraction (the concrete-repair baseline) and once on the label
/// partition — and reports median wall times over `reps` runs.
BenchRow bench_model(const std::string& name, const KripkeStructure& m, const std::string& state,
                     const CtlPtr& formula, int reps);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

} // namespace amr
