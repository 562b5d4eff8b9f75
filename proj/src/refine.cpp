#include "amr/refine.hpp"

#include <algorithm>
#include <stdexcept>

namespace amr {

FailureCause find_failure(const Kmts& m, const CheckResult& result) {
    (void)m;
    if (result.verdict != Tv::U)
        throw std::invalid_argument("find_failure requires an undefined verdict");
    if (!result.cause) throw std::logic_error("check result carries no failure cause");
    return *result.cause;
}

AbstractionMap split(const KripkeStructure& m, const AbstractionMap& p, const Kmts& abs,
                     const FailureCause& cause) {
    const std::string& block_name = abs.state_name(cause.state);
    const auto& members = p.block(p.block_index(block_name)).members;
    if (members.size() < 2)
        throw std::runtime_error("cannot refine: block " + block_name + " is a singleton");

    AbstractionMap::Block side1{block_name + "1", {}};
    AbstractionMap::Block side2{block_name + "2", {}};
    // Avoid clashing with an unrelated block that already has the name.
    while (p.has_block(side1.name)) side1.name += "s";
    while (p.has_block(side2.name)) side2.name += "s";

    if (cause.kind == FailureCause::UnknownLiteral) {
        for (const auto& s : members) {
            auto v = m.label_value(m.index_of(s), cause.prop);
            bool holds = v && *v;
            (holds ? side1 : side2).members.push_back(s);
        }
    } else {
        const auto& target_members = p.block(p.block_index(abs.state_name(cause.edge_to))).members;
        for (const auto& s : members) {
            int si = m.index_of(s);
            bool has = std::any_of(target_members.begin(), target_members.end(),
                                   [&](const std::string& t) { return m.has_edge(si, m.index_of(t)); });
            (has ? side2 : side1).members.push_back(s);
        }
    }
    if (side1.members.empty() || side2.members.empty())
        throw std::runtime_error("cannot refine: cause does not separate block " + block_name);
    return p.with_block_split(block_name, std::move(side1), std::move(side2), m);
}

RefinementResult refine_until_definite(const KripkeStructure& m, const AbstractionMap& p0,
                                       const std::string& state, const CtlPtr& formula) {
    RefinementResult out;
    out.partition = p0;
    int limit = m.state_count() + 1;
    for (int iter = 0; iter <= limit; ++iter) {
        out.kmts = abstract(m, out.partition);
        CheckResult res;
        Tv v = check3(out.kmts, out.partition.alpha(state), formula, &res);
        out.steps.push_back({out.partition, v, res.cause});
        out.verdict = v;
        if (v != Tv::U) return out;
        try {
            out.partition = split(m, out.partition, out.kmts, *res.cause);
        } catch (const std::runtime_error& e) {
            out.failed = true;
            out.failure_reason = e.what();
            return out;
        }
        out.refinements += 1;
    }
    out.failed = true;
    out.failure_reason = "refinement did not converge";
    return out;
}

} // namespace amr
