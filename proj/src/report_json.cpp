#include "amr/report_json.hpp"

#include "amr/io.hpp"

#include <json.hpp>

namespace amr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json op_to_json(const BasicRepairOp& op) {
    ordered_json j;
    j["op"] = to_string(op.kind);
    switch (op.kind) {
    case OpKind::AddMust:
    case OpKind::AddMay:
    case OpKind::RemoveMust:
    case OpKind::RemoveMay:
        j["from"] = op.from;
        j["to"] = op.to;
        break;
    case OpKind::ChangeLabel: {
        j["state"] = op.state;
        std::vector<std::string> lits;
        for (const auto& l : op.literals) lits.push_back(to_string(l));
        j["literals"] = lits;
        break;
    }
    default: j["state"] = op.state; break;
    }
    return j;
}

} // namespace

std::string report_to_json(const PipelineReport& rep, bool include_timings) {
    ordered_json j;
    j["formula"] = rep.formula;
    j["state"] = rep.state;
    j["status"] = to_string(rep.status);
    j["initial_verdict"] = to_string(rep.initial_verdict);
    {
        std::vector<std::string> vs;
        for (Tv v : rep.stage_verdicts) vs.push_back(to_string(v));
        j["stage_verdicts"] = vs;
    }
    j["refinements"] = rep.refinements;
    j["abstract_states"] = rep.abstract_states;
    j["final_abstract_verdict"] = to_string(rep.final_abstract_verdict);
    {
        ordered_json blocks = ordered_json::object();
        for (const auto& b : rep.final_partition.blocks()) blocks[b.name] = b.members;
        j["partition"] = blocks;
    }
    {
        ordered_json trace = ordered_json::array();
        for (const auto& op : rep.trace) trace.push_back(op_to_json(op));
        j["trace"] = trace;
    }
    j["d_hat"] = rep.d_hat;
    if (rep.repaired_kmts) j["repaired_kmts"] = print_kmts(*rep.repaired_kmts);
    {
        ordered_json cs = ordered_json::array();
        for (const auto& c : rep.concretizations) {
            ordered_json e;
            e["d"] = c.d;
            e["verified"] = c.verified;
            e["model"] = print_ks(c.model);
            cs.push_back(e);
        }
        j["concretizations"] = cs;
        j["min_d"] = rep.min_d;
    }
    j["notes"] = rep.notes;
    if (!rep.failure_reason.empty()) j["failure_reason"] = rep.failure_reason;
    if (include_timings) {
        ordered_json t;
        t["abstraction_ms"] = rep.timings.abstraction_ms;
        t["refinement_ms"] = rep.timings.refinement_ms;
        t["repair_ms"] = rep.timings.repair_ms;
        t["concretization_ms"] = rep.timings.concretization_ms;
        t["total_ms"] = rep.timings.total_ms;
        j["timings"] = t;
    }
    return j.dump(2) + "\n";
}

} // namespace amr
