#include "amr/bench.hpp"
#include "amr/check.hpp"
#include "amr/io.hpp"
#include "amr/metrics.hpp"
#include "amr/pipeline.hpp"
#include "amr/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalseOrRepaired = 1;
constexpr int kExitUndefined = 2;
constexpr int kExitRepairFailed = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

amr::KripkeStructure load_ks(const std::string& path) {
    auto parsed = amr::load_model(path);
    if (!parsed.is_ks()) throw DataError(path + " is not a concrete model (expected trans:)");
    return *parsed.ks;
}

amr::ParsedModel load_kmts(const std::string& path) {
    auto parsed = amr::load_model(path);
    if (parsed.is_ks()) throw DataError(path + " is not a partial model (expected must:/may:)");
    return parsed;
}

amr::CtlPtr parse_formula(const std::string& text) { return amr::parse_ctl(text); }

int cmd_check(const std::string& model, const std::string& state, const std::string& formula) {
    auto ks = load_ks(model);
    bool ok = amr::check2(ks, state, parse_formula(formula));
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kExitTrue : kExitFalseOrRepaired;
}

int cmd_check3(const std::string& model, const std::string& state, const std::string& formula) {
    auto parsed = load_kmts(model);
    amr::Tv v = amr::check3(*parsed.kmts, state, parse_formula(formula));
    std::cout << amr::to_string(v) << "\n";
    switch (v) {
    case amr::Tv::T: return kExitTrue;
    case amr::Tv::F: return kExitFalseOrRepaired;
    default: return kExitUndefined;
    }
}

int cmd_abstract(const std::string& model, const std::string& partition_path) {
    auto ks = load_ks(model);
    amr::AbstractionMap map =
        partition_path.empty() ? amr::default_partition(ks) : amr::load_partition(partition_path);
    auto problems = amr::validate_partition(ks, map);
    if (!problems.empty()) throw DataError("invalid partition: " + problems.front());
    std::cout << amr::print_kmts(amr::abstract(ks, map), &map);
    return kExitTrue;
}

int cmd_refine(const std::string& model, const std::string& state, const std::string& formula) {
    auto ks = load_ks(model);
    auto res = amr::refine_until_definite(ks, amr::default_partition(ks), state,
                                          parse_formula(formula));
    for (size_t i = 0; i < res.steps.size(); ++i) {
        std::cout << "# iteration " << i << ": " << amr::to_string(res.steps[i].verdict) << "\n";
        std::cout << amr::print_partition(res.steps[i].partition);
    }
    if (res.failed) {
        std::cerr << "refinement failed: " << res.failure_reason << "\n";
        return kExitUndefined;
    }
    std::cout << "# verdict: " << amr::to_string(res.verdict) << " after " << res.refinements
              << " refinement(s)\n";
    return res.verdict == amr::Tv::T ? kExitTrue : kExitFalseOrRepaired;
}

int cmd_repair(const std::string& model, const std::string& state, const std::string& formula,
               const std::string& json_path, bool identity) {
    auto ks = load_ks(model);
    amr::PipelineOptions opts;
    if (identity) opts.partition = amr::singleton_partition(ks);
    amr::PipelineReport rep = amr::run_pipeline(ks, state, parse_formula(formula), opts);

    if (!json_path.empty()) {
        if (json_path == "-") {
            std::cout << amr::report_to_json(rep);
        } else {
            std::ofstream out(json_path);
            if (!out) throw DataError("cannot write " + json_path);
            out << amr::report_to_json(rep);
        }
    }
    if (json_path != "-") {
        std::cout << "status: " << amr::to_string(rep.status) << "\n";
        std::cout << "refinements: " << rep.refinements << " (abstract states: "
                  << rep.abstract_states << ")\n";
        if (!rep.trace.empty()) {
            std::cout << "trace:\n";
            for (const auto& op : rep.trace) std::cout << "  " << amr::to_string(op) << "\n";
            std::cout << "d_hat: " << rep.d_hat << "\n";
        }
        if (!rep.concretizations.empty()) {
            std::cout << "minimal concrete models: " << rep.concretizations.size()
                      << " (d = " << rep.min_d << ")\n";
            std::cout << amr::print_ks(rep.concretizations.front().model);
        }
        if (!rep.failure_reason.empty()) std::cerr << "failure: " << rep.failure_reason << "\n";
    }
    switch (rep.status) {
    case amr::PipelineStatus::NoRepairNeeded: return kExitTrue;
    case amr::PipelineStatus::Repaired: return kExitFalseOrRepaired;
    case amr::PipelineStatus::RefinementFailed: return kExitUndefined;
    default: return kExitRepairFailed;
    }
}

int cmd_distance(const std::string& left, const std::string& right) {
    auto a = amr::load_model(left);
    auto b = amr::load_model(right);
    if (a.is_ks() != b.is_ks()) throw DataError("distance requires two models of the same kind");
    double d = a.is_ks() ? amr::distance_ks(*a.ks, *b.ks) : amr::distance_kmts(*a.kmts, *b.kmts);
    std::cout << d << "\n";
    return kExitTrue;
}

int cmd_bench(const std::string& fixtures, int max_ext, int reps, const std::string& csv_path,
              bool as_json) {
    std::vector<std::pair<std::string, std::string>> files{{"AFS1", fixtures + "/afs1.ks"}};
    for (int i = 1; i <= max_ext; ++i)
        files.emplace_back("AFS1-ext" + std::to_string(i),
                           fixtures + "/afs1_ext" + std::to_string(i) + ".ks");
    auto formula = parse_formula("AG (!p | q)");
    std::vector<amr::BenchRow> rows;
    for (const auto& [name, path] : files)
        rows.push_back(amr::bench_model(name, load_ks(path), "s11", formula, reps));
    std::string out = as_json ? amr::bench_json(rows) : amr::bench_csv(rows);
    if (csv_path.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(csv_path);
        if (!f) throw DataError("cannot write " + csv_path);
        f << out;
    }
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abstract model repair for CTL over Kripke structures"};
    app.require_subcommand(1);

    std::string model, state, formula, model2;
    std::string partition_path, json_path, fixtures = "fixtures", csv_path;
    bool identity = false, as_json = false;
    int max_ext = 3, reps = 15;

    auto* check = app.add_subcommand("check", "2-valued CTL check on a concrete model");
    check->add_option("model", model)->required();
    check->add_option("state", state)->required();
    check->add_option("formula", formula)->required();

    auto* check3 = app.add_subcommand("check3", "3-valued CTL check on a partial model");
    check3->add_option("model", model)->required();
    check3->add_option("state", state)->required();
    check3->add_option("formula", formula)->required();

    auto* abs = app.add_subcommand("abstract", "build the abstraction of a concrete model");
    abs->add_option("model", model)->required();
    abs->add_option("--partition", partition_path, "partition file (default: label classes)");

    auto* refine = app.add_subcommand("refine", "refine the abstraction until a definite verdict");
    refine->add_option("model", model)->required();
    refine->add_option("state", state)->required();
    refine->add_option("formula", formula)->required();

    auto* repair = app.add_subcommand("repair", "run the abstraction-refine-repair pipeline");
    repair->add_option("model", model)->required();
    repair->add_option("state", state)->required();
    repair->add_option("formula", formula)->required();
    repair->add_option("--json", json_path, "write the full report as JSON ('-' for stdout)");
    repair->add_flag("--identity", identity, "use the identity abstraction (concrete baseline)");

    auto* dist = app.add_subcommand("distance", "structural distance between two models");
    dist->add_option("left", model)->required();
    dist->add_option("right", model2)->required();

    auto* bench = app.add_subcommand("bench", "compare abstract repair against the concrete baseline");
    bench->add_option("--fixtures", fixtures, "fixture directory");
    bench->add_option("--afs1-ext", max_ext, "largest AFS1 extension to include (0-3)")
        ->check(CLI::Range(0, 3));
    bench->add_option("--reps", reps, "repetitions per measurement");
    bench->add_option("--out", csv_path, "write the table to a file");
    bench->add_flag("--json", as_json, "emit JSON instead of CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*check) return cmd_check(model, state, formula);
        if (*check3) return cmd_check3(model, state, formula);
        if (*abs) return cmd_abstract(model, partition_path);
        if (*refine) return cmd_refine(model, state, formula);
        if (*repair) return cmd_repair(model, state, formula, json_path, identity);
        if (*dist) return cmd_distance(model, model2);
        if (*bench) return cmd_bench(fixtures, max_ext, reps, csv_path, as_json);
    } catch (const amr::CtlParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const amr::ModelParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
