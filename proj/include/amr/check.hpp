#pragma once

#include "amr/ctl.hpp"
#include "amr/kmts.hpp"
#include "amr/kripke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amr {

enum class Tv { F, U, T };

std::string to_string(Tv v);

/// Why a 3-valued check came out unknown: either a proposition has no value
/// at some state, or a transition exists as may but not as must.
struct FailureCause {
    enum Kind { UnknownLiteral, MayNotMust } kind;
    int state;              // failure state
    std::string prop;       // UnknownLiteral
    int edge_to = -1;       // MayNotMust: target of the may-only edge
};

/// Per-state, per-subformula verdicts of one check3 run. Subformulas are
/// indexed in preorder; index 0 is the whole query.
struct CheckResult {
    std::vector<CtlPtr> subformulas;
    std::vector<std::vector<Tv>> values; // [subformula][state]
    Tv verdict = Tv::U;
    int target = -1;
    std::optional<FailureCause> cause; // set when verdict == U

    Tv value_of(int subformula, int state) const { return values[subformula][state]; }
};

/// 3-valued CTL satisfaction at a state, computed as two 2-valued fixpoint
/// passes: a pessimistic pass where universal operators range over may-paths
/// and existential ones over must-paths, and an optimistic pass with the
/// roles swapped. True when the pessimistic pass accepts, false when the
/// optimistic pass rejects, unknown otherwise. Finite maximal paths (states
/// with no successor in the pass relation) count as maximal paths.
Tv check3(const Kmts& m, const std::string& state, const CtlPtr& formula,
          CheckResult* result = nullptr);
Tv check3(const Kmts& m, int state, const CtlPtr& formula, CheckResult* result = nullptr);

/// Classical 2-valued CTL on a concrete model; agrees with check3 on the
/// identity view, where unknown cannot occur.
bool check2(const KripkeStructure& m, const std::string& state, const CtlPtr& formula);
bool check2(const KripkeStructure& m, int state, const CtlPtr& formula);

enum class PathMode { Must, May };

/// Maximal paths from a state, each transition used at most once per path.
/// A path ends when every transition out of its last state has been used.
/// Deterministic: successors are explored in declared state order.
std::vector<std::vector<int>> maximal_paths(const Kmts& m, const std::string& from, PathMode mode);
std::vector<std::vector<int>> maximal_paths(const Kmts& m, int from, PathMode mode);

} // namespace amr
