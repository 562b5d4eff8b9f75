#include "amr/bench.hpp"

#include "amr/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace amr {

namespace {

using Clock = std::chrono::steady_clock;

double median_run_ms(const KripkeStructure& m, const std::string& state, const CtlPtr& formula,
                     const PipelineOptions& opts, int reps, double* d_out) {
    std::vector<double> times;
    times.reserve(reps);
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        PipelineReport rep = run_pipeline(m, state, formula, opts);
        times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
        if (rep.status != PipelineStatus::Repaired)
            throw std::runtime_error("benchmark pipeline did not produce a repair: " +
                                     to_string(rep.status));
        if (d_out) *d_out = rep.min_d;
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace

BenchRow bench_model(const std::string& name, const KripkeStructure& m, const std::string& state,
                     const CtlPtr& formula, int reps) {
    BenchRow row;
    row.model = name;
    row.states = m.state_count();
    PipelineOptions concrete;
    concrete.partition = singleton_partition(m);
    row.concrete_ms = median_run_ms(m, state, formula, concrete, reps, &row.concrete_d);
    row.amr_ms = median_run_ms(m, state, formula, {}, reps, &row.amr_d);
    row.ratio = row.amr_ms > 0 ? row.concrete_ms / row.amr_ms : 0;
    return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "model,states,concrete_ms,amr_ms,ratio,concrete_d,amr_d\n";
    for (const auto& r : rows) {
        os << r.model << "," << r.states << "," << r.concrete_ms << "," << r.amr_ms << ","
           << r.ratio << "," << r.concrete_d << "," << r.amr_d << "\n";
    }
    return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << (i ? ",\n " : "\n ") << "{\"model\": \"" << r.model << "\", \"states\": " << r.states
           << ", \"concrete_ms\": " << r.concrete_ms << ", \"amr_ms\": " << r.amr_ms
           << ", \"ratio\": " << r.ratio << ", \"concrete_d\": " << r.concrete_d
           << ", \"amr_d\": " << r.amr_d << "}";
    }
    os << "\n]\n";
    return os.str();
}

} // namespace amr
