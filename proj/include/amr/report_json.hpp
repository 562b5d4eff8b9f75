#pragma once

#include "amr/bench.hpp"
#include "amr/pipeline.hpp"

#include <string>

namespace amr {

/// Fixed-key-order JSON rendering of a pipeline report (schema in
/// docs/report.schema.json). Identical inputs produce identical documents
/// except for the timings block, which can be omitted.
std::string report_to_json(const PipelineReport& rep, bool include_timings = true);

} // namespace amr
