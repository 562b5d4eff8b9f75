#include "amr/pipeline.hpp"

#include "amr/metrics.hpp"

#include <algorithm>
#include <chrono>

namespace amr {

std::string to_string(PipelineStatus s) {
    switch (s) {
    case PipelineStatus::NoRepairNeeded: return "no_repair_needed";
    case PipelineStatus::Repaired: return "repaired";
    case PipelineStatus::RefinementFailed: return "refinement_failed";
    case PipelineStatus::RepairFailed: return "repair_failed";
    case PipelineStatus::ConcretizationFailed: return "concretization_failed";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Composition {
    KripkeStructure model;
    AbstractionMap map;
};

} // namespace

PipelineReport run_pipeline(const KripkeStructure& m, const std::string& state,
                            const CtlPtr& formula, const PipelineOptions& options) {
    PipelineReport rep;
    rep.state = state;
    rep.formula = print_ctl(formula);
    auto t_total = Clock::now();

    // Step 1: build the abstraction.
    auto t0 = Clock::now();
    AbstractionMap p0 = options.partition ? *options.partition : default_partition(m);
    rep.timings.abstraction_ms = ms_since(t0);

    // Step 2: check, refining while the verdict is undefined.
    t0 = Clock::now();
    RefinementResult ref = refine_until_definite(m, p0, state, formula);
    rep.timings.refinement_ms = ms_since(t0);
    for (const auto& step : ref.steps) rep.stage_verdicts.push_back(step.verdict);
    rep.initial_verdict = ref.steps.front().verdict;
    rep.refinements = ref.refinements;
    rep.final_partition = ref.partition;
    rep.abstract_states = ref.kmts.state_count();
    rep.final_abstract_verdict = ref.verdict;

    if (ref.failed) {
        rep.status = PipelineStatus::RefinementFailed;
        rep.failure_reason = ref.failure_reason;
        rep.timings.total_ms = ms_since(t_total);
        return rep;
    }
    if (ref.verdict == Tv::T) {
        rep.status = PipelineStatus::NoRepairNeeded;
        rep.timings.total_ms = ms_since(t_total);
        return rep;
    }

    // Step 3: repair the refined abstraction.
    t0 = Clock::now();
    CtlPtr pnf = to_pnf(formula);
    std::string target = ref.partition.alpha(state);
    RepairReturn rr = abstract_repair(ref.kmts, target, pnf, {});
    rep.timings.repair_ms = ms_since(t0);
    if (!rr.ok()) {
        rep.status = PipelineStatus::RepairFailed;
        rep.failure_reason = rr.failure;
        rep.timings.total_ms = ms_since(t_total);
        return rep;
    }
    rep.trace = rr.result->trace;
    rep.repaired_kmts = rr.result->model;
    rep.d_hat = distance_kmts(ref.kmts, rr.result->model);

    // Step 4: concretize each trace operation and keep the concrete models
    // of minimal distance from the original.
    t0 = Clock::now();
    std::vector<Composition> frontier{{m, ref.partition}};
    Kmts current = ref.kmts;
    bool failed = false;
    for (const auto& op : rep.trace) {
        Kmts next = apply_basic_op(current, op);
        std::vector<Composition> grown;
        for (const auto& comp : frontier) {
            AbstractionMap next_map = comp.map;
            if (op.kind == OpKind::AddState)
                next_map = comp.map.with_block_added({op.state, {op.state}});
            else if (op.kind == OpKind::RemoveState)
                next_map = comp.map.with_block_removed(op.state);
            ConcretizationResult c = concretize_min(comp.model, comp.map, op, next);
            for (const auto& note : c.rejected) rep.notes.push_back(note);
            for (auto& model : c.models) grown.push_back({std::move(model), next_map});
        }
        current = std::move(next);
        frontier = std::move(grown);
        if (frontier.empty()) {
            failed = true;
            break;
        }
        if (frontier.size() > 4096) { // combinatorial safety valve
            frontier.resize(4096);
            rep.notes.push_back("concretization frontier truncated to 4096 candidates");
        }
    }

    if (!failed) {
        std::vector<ConcretizationEntry> entries;
        for (auto& comp : frontier) {
            if (!validate_ks(comp.model).empty()) {
                rep.notes.push_back("dropped a concretization with unresolved states");
                continue;
            }
            if (!is_concretization_of(comp.model, current, comp.map)) {
                rep.notes.push_back("dropped a candidate that does not realize the repaired model");
                continue;
            }
            ConcretizationEntry e;
            e.d = distance_ks(m, comp.model);
            e.verified = check2(comp.model, state, formula);
            e.model = std::move(comp.model);
            entries.push_back(std::move(e));
        }
        if (entries.empty()) {
            failed = true;
        } else {
            double best = entries.front().d;
            for (const auto& e : entries) best = std::min(best, e.d);
            for (auto& e : entries)
                if (e.d == best) rep.concretizations.push_back(std::move(e));
            rep.min_d = best;
        }
    }
    rep.timings.concretization_ms = ms_since(t0);
    rep.timings.total_ms = ms_since(t_total);
    rep.status = failed ? PipelineStatus::ConcretizationFailed : PipelineStatus::Repaired;
    if (failed && rep.failure_reason.empty())
        rep.failure_reason = "no valid concrete model realizes the repair";
    return rep;
}

} // namespace amr
