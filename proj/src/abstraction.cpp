#include "amr/abstraction.hpp"

#include "amr/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace amr {

AbstractionMap::AbstractionMap(std::vector<Block> blocks) : blocks_(std::move(blocks)) { reindex(); }

void AbstractionMap::reindex() {
    block_index_.clear();
    alpha_.clear();
    for (int i = 0; i < static_cast<int>(blocks_.size()); ++i) {
        if (!block_index_.emplace(blocks_[i].name, i).second)
            throw std::invalid_argument("duplicate block name " + blocks_[i].name);
        for (const auto& s : blocks_[i].members) {
            if (!alpha_.emplace(s, i).second)
                throw std::invalid_argument("state " + s + " appears in two blocks");
        }
    }
}

bool AbstractionMap::has_block(const std::string& name) const { return block_index_.count(name) != 0; }

int AbstractionMap::block_index(const std::string& name) const {
    auto it = block_index_.find(name);
    if (it == block_index_.end()) throw std::invalid_argument("unknown block " + name);
    return it->second;
}

const std::string& AbstractionMap::alpha(const std::string& concrete) const {
    auto it = alpha_.find(concrete);
    if (it == alpha_.end()) throw std::invalid_argument("state " + concrete + " is not mapped");
    return blocks_[it->second].name;
}

bool AbstractionMap::maps(const std::string& concrete) const { return alpha_.count(concrete) != 0; }

AbstractionMap AbstractionMap::with_block_added(Block b) const {
    auto blocks = blocks_;
    blocks.push_back(std::move(b));
    return AbstractionMap(std::move(blocks));
}

AbstractionMap AbstractionMap::with_block_removed(const std::string& name) const {
    auto blocks = blocks_;
    int i = block_index(name);
    blocks.erase(blocks.begin() + i);
    return AbstractionMap(std::move(blocks));
}

AbstractionMap AbstractionMap::with_block_split(const std::string& name, Block first, Block second,
                                                const KripkeStructure& m) const {
    if (first.members.empty() || second.members.empty())
        throw std::invalid_argument("split sides must both be nonempty");
    auto blocks = blocks_;
    int i = block_index(name);
    blocks.erase(blocks.begin() + i);
    blocks.push_back(std::move(first));
    blocks.push_back(std::move(second));
    // Canonical block order: by the declared position of the first member.
    auto first_member_pos = [&m](const Block& b) {
        int best = m.state_count();
        for (const auto& s : b.members)
            if (m.has_state(s)) best = std::min(best, m.index_of(s));
        return best;
    };
    std::stable_sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) {
        return first_member_pos(a) < first_member_pos(b);
    });
    return AbstractionMap(std::move(blocks));
}

std::vector<std::string> validate_partition(const KripkeStructure& m, const AbstractionMap& p) {
    std::vector<std::string> out;
    std::set<std::string> covered;
    for (const auto& b : p.blocks()) {
        if (b.members.empty()) out.push_back("block " + b.name + " is empty");
        for (const auto& s : b.members) {
            if (!m.has_state(s)) out.push_back("block " + b.name + " names unknown state " + s);
            covered.insert(s);
        }
    }
    for (const auto& s : m.states())
        if (!covered.count(s)) out.push_back("state " + s + " is not covered by any block");
    return out;
}

AbstractionMap default_partition(const KripkeStructure& m) {
    std::vector<AbstractionMap::Block> blocks;
    std::map<std::map<std::string, bool>, int> by_label;
    for (int i = 0; i < m.state_count(); ++i) {
        auto it = by_label.find(m.label(i));
        if (it == by_label.end()) {
            by_label.emplace(m.label(i), static_cast<int>(blocks.size()));
            blocks.push_back({"", {m.state_name(i)}});
        } else {
            blocks[it->second].members.push_back(m.state_name(i));
        }
    }
    for (size_t i = 0; i < blocks.size(); ++i) blocks[i].name = "a" + std::to_string(i);
    return AbstractionMap(std::move(blocks));
}

AbstractionMap singleton_partition(const KripkeStructure& m) {
    std::vector<AbstractionMap::Block> blocks;
    for (const auto& s : m.states()) blocks.push_back({s, {s}});
    return AbstractionMap(std::move(blocks));
}

Kmts abstract(const KripkeStructure& m, const AbstractionMap& p) {
    auto problems = validate_partition(m, p);
    if (!problems.empty()) throw std::invalid_argument("invalid partition: " + problems.front());

    int nb = p.block_count();
    std::vector<std::string> names;
    std::vector<int> sizes;
    std::vector<std::string> initial;
    std::map<std::string, std::vector<Literal>> labels;

    std::vector<std::vector<int>> member_idx(nb);
    for (int b = 0; b < nb; ++b) {
        names.push_back(p.block(b).name);
        sizes.push_back(static_cast<int>(p.block(b).members.size()));
        for (const auto& s : p.block(b).members) member_idx[b].push_back(m.index_of(s));
    }

    for (int b = 0; b < nb; ++b) {
        bool init = std::any_of(member_idx[b].begin(), member_idx[b].end(),
                                [&](int s) { return m.is_initial(s); });
        if (init) initial.push_back(names[b]);
        // Shared labeling: the strongest set of literals all members agree on.
        std::vector<Literal> shared;
        for (const auto& prop : m.props()) {
            bool all_true = true, all_false = true;
            for (int s : member_idx[b]) {
                auto v = m.label_value(s, prop);
                all_true &= v && *v;
                all_false &= v && !*v;
            }
            if (all_true) shared.emplace_back(prop, false);
            else if (all_false) shared.emplace_back(prop, true);
        }
        labels[names[b]] = std::move(shared);
    }

    // succ_blocks[s] = blocks reachable from s in one concrete step
    std::vector<std::set<int>> succ_blocks(m.state_count());
    std::vector<int> alpha_idx(m.state_count());
    for (int b = 0; b < nb; ++b)
        for (int s : member_idx[b]) alpha_idx[s] = b;
    for (const auto& [a, t] : m.edges()) succ_blocks[a].insert(alpha_idx[t]);

    std::vector<std::pair<std::string, std::string>> must, may;
    for (int b1 = 0; b1 < nb; ++b1) {
        for (int b2 = 0; b2 < nb; ++b2) {
            bool any = false, all = true;
            for (int s : member_idx[b1]) {
                bool hit = succ_blocks[s].count(b2) != 0;
                any |= hit;
                all &= hit;
            }
            if (all) must.emplace_back(names[b1], names[b2]);
            if (any) may.emplace_back(names[b1], names[b2]);
        }
    }
    return Kmts(m.props(), names, initial, must, may, labels, sizes);
}

std::vector<std::pair<std::string, std::string>> alpha_relation(const KripkeStructure& m,
                                                                const AbstractionMap& p) {
    std::vector<std::pair<std::string, std::string>> h;
    for (const auto& s : m.states()) h.emplace_back(s, p.alpha(s));
    return h;
}

MixedSimulationResult mixed_simulation(const KripkeStructure& m, const Kmts& a,
                                       const std::vector<std::pair<std::string, std::string>>& h) {
    std::set<std::pair<int, int>> rel;
    for (const auto& [cs, as] : h) rel.emplace(m.index_of(cs), a.index_of(as));

    auto related = [&rel](int c, int ab) { return rel.count({c, ab}) != 0; };

    for (const auto& [c, ab] : rel) {
        for (const Literal& lit : a.literals(ab)) {
            if (!m.has_literal(c, lit))
                return {false, 1, m.state_name(c), a.state_name(ab),
                        "abstract literal " + to_string(lit) + " does not hold concretely"};
        }
        for (int c2 : m.successors(c)) {
            bool matched = false;
            for (int a2 : a.may_successors(ab))
                if (related(c2, a2)) {
                    matched = true;
                    break;
                }
            if (!matched)
                return {false, 2, m.state_name(c), a.state_name(ab),
                        "concrete step to " + m.state_name(c2) + " has no may-transition match"};
        }
        for (int a2 : a.must_successors(ab)) {
            bool matched = false;
            for (int c2 : m.successors(c))
                if (related(c2, a2)) {
                    matched = true;
                    break;
                }
            if (!matched)
                return {false, 3, m.state_name(c), a.state_name(ab),
                        "must-transition to " + a.state_name(a2) + " has no concrete step match"};
        }
    }
    return {};
}

bool is_concretization_of(const KripkeStructure& candidate, const Kmts& abs,
                          const AbstractionMap& p) {
    if (!validate_partition(candidate, p).empty()) return false;
    // Initial states agree per block: initial members only in initial blocks,
    // and every initial block has at least one initial member.
    for (int i = 0; i < candidate.state_count(); ++i) {
        if (candidate.is_initial(i) && !abs.is_initial(abs.index_of(p.alpha(candidate.state_name(i)))))
            return false;
    }
    for (int b = 0; b < abs.state_count(); ++b) {
        if (!abs.is_initial(b)) continue;
        bool any = false;
        for (const auto& s : p.block(p.block_index(abs.state_name(b))).members)
            any |= candidate.is_initial(candidate.index_of(s));
        if (!any) return false;
    }
    // Labels: everything the abstract state asserts holds for each member.
    for (int i = 0; i < candidate.state_count(); ++i) {
        int b = abs.index_of(p.alpha(candidate.state_name(i)));
        for (const Literal& lit : abs.literals(b))
            if (!candidate.has_literal(i, lit)) return false;
    }
    // Transitions: abstracting the candidate reproduces must/may exactly.
    Kmts re = abstract(candidate, p);
    std::set<std::pair<std::string, std::string>> remust, remay, mmust, mmay;
    for (const auto& [x, y] : re.must()) remust.emplace(re.state_name(x), re.state_name(y));
    for (const auto& [x, y] : re.may()) remay.emplace(re.state_name(x), re.state_name(y));
    for (const auto& [x, y] : abs.must()) mmust.emplace(abs.state_name(x), abs.state_name(y));
    for (const auto& [x, y] : abs.may()) mmay.emplace(abs.state_name(x), abs.state_name(y));
    return remust == mmust && remay == mmay;
}

namespace {

struct KsParts {
    std::vector<std::string> props, states, initial;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::vector<Literal>> labels;
};

KsParts decompose(const KripkeStructure& m) {
    KsParts p;
    p.props = m.props();
    p.states = m.states();
    for (int i : m.initial_states()) p.initial.push_back(m.state_name(i));
    for (const auto& [a, b] : m.edges()) p.edges.emplace_back(m.state_name(a), m.state_name(b));
    for (int i = 0; i < m.state_count(); ++i) {
        auto lits = m.literals(i);
        p.labels[m.state_name(i)] = lits;
    }
    return p;
}

KripkeStructure rebuild(KsParts p) {
    return KripkeStructure(std::move(p.props), std::move(p.states), std::move(p.initial),
                           std::move(p.edges), std::move(p.labels));
}

// States that violate totality or labeling completeness; used to reject only
// candidates that introduce violations the input did not have.
std::set<std::string> broken_states(const KripkeStructure& m) {
    std::set<std::string> out;
    for (int i = 0; i < m.state_count(); ++i) {
        if (m.successors(i).empty()) out.insert(m.state_name(i));
        for (const auto& prop : m.props())
            if (!m.label_value(i, prop)) out.insert(m.state_name(i));
    }
    return out;
}

} // namespace

ConcretizationResult concretize_min(const KripkeStructure& m, const AbstractionMap& p,
                                    const BasicRepairOp& op, const Kmts& expected) {
    Kmts base = abstract(m, p);
    Kmts applied = apply_basic_op(base, op);
    if (!(applied == expected))
        throw std::invalid_argument("operation does not reproduce the expected abstract model");

    auto gamma = [&](const std::string& block) -> const std::vector<std::string>& {
        return p.block(p.block_index(block)).members;
    };

    std::vector<KripkeStructure> raw;
    switch (op.kind) {
    case OpKind::AddMust: {
        // One candidate per choice of target member: every source-block
        // member without a successor in the target block gets an edge to it.
        for (const auto& target : gamma(op.to)) {
            KsParts parts = decompose(m);
            for (const auto& src : gamma(op.from)) {
                int si = m.index_of(src);
                bool has = std::any_of(gamma(op.to).begin(), gamma(op.to).end(), [&](const auto& t) {
                    return m.has_edge(si, m.index_of(t));
                });
                if (!has) parts.edges.emplace_back(src, target);
            }
            raw.push_back(rebuild(std::move(parts)));
        }
        break;
    }
    case OpKind::AddMay: {
        // One candidate per missing concrete edge between the two blocks.
        for (const auto& src : gamma(op.from)) {
            for (const auto& dst : gamma(op.to)) {
                if (m.has_edge(m.index_of(src), m.index_of(dst))) continue;
                KsParts parts = decompose(m);
                parts.edges.emplace_back(src, dst);
                raw.push_back(rebuild(std::move(parts)));
            }
        }
        break;
    }
    case OpKind::RemoveMust: {
        // One candidate per source member: drop all its edges into the block.
        for (const auto& src : gamma(op.from)) {
            int si = m.index_of(src);
            KsParts parts = decompose(m);
            auto is_removed = [&](const std::pair<std::string, std::string>& e) {
                if (e.first != src) return false;
                return std::find(gamma(op.to).begin(), gamma(op.to).end(), e.second) !=
                       gamma(op.to).end();
            };
            size_t before = parts.edges.size();
            parts.edges.erase(std::remove_if(parts.edges.begin(), parts.edges.end(), is_removed),
                              parts.edges.end());
            if (parts.edges.size() == before) continue; // this member had none
            (void)si;
            raw.push_back(rebuild(std::move(parts)));
        }
        break;
    }
    case OpKind::RemoveMay: {
        KsParts parts = decompose(m);
        auto is_removed = [&](const std::pair<std::string, std::string>& e) {
            return std::find(gamma(op.from).begin(), gamma(op.from).end(), e.first) !=
                       gamma(op.from).end() &&
                   std::find(gamma(op.to).begin(), gamma(op.to).end(), e.second) !=
                       gamma(op.to).end();
        };
        parts.edges.erase(std::remove_if(parts.edges.begin(), parts.edges.end(), is_removed),
                          parts.edges.end());
        raw.push_back(rebuild(std::move(parts)));
        break;
    }
    case OpKind::ChangeLabel: {
        KsParts parts = decompose(m);
        for (const auto& s : gamma(op.state)) {
            auto& lits = parts.labels[s];
            for (const auto& l : op.literals) {
                lits.erase(std::remove(lits.begin(), lits.end(), l.complement()), lits.end());
                if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
            }
        }
        raw.push_back(rebuild(std::move(parts)));
        break;
    }
    case OpKind::AddState: {
        // The fresh state is deliberately left unlabeled and unconnected;
        // later operations force its labeling and transitions.
        if (m.has_state(op.state))
            throw std::invalid_argument("fresh state id " + op.state + " already in use");
        KsParts parts = decompose(m);
        parts.states.push_back(op.state);
        parts.labels[op.state] = {};
        raw.push_back(rebuild(std::move(parts)));
        break;
    }
    case OpKind::RemoveState: {
        KsParts parts = decompose(m);
        const auto& members = gamma(op.state);
        auto is_member = [&](const std::string& s) {
            return std::find(members.begin(), members.end(), s) != members.end();
        };
        parts.states.erase(std::remove_if(parts.states.begin(), parts.states.end(), is_member),
                           parts.states.end());
        parts.initial.erase(std::remove_if(parts.initial.begin(), parts.initial.end(), is_member),
                            parts.initial.end());
        for (const auto& s : members) parts.labels.erase(s);
        raw.push_back(rebuild(std::move(parts)));
        break;
    }
    }

    ConcretizationResult out;
    auto pre_broken = broken_states(m);
    std::vector<std::pair<double, KripkeStructure>> scored;
    for (auto& cand : raw) {
        bool fresh_ok = true;
        for (const auto& s : broken_states(cand)) {
            // AddState introduces exactly one deliberately-unresolved state.
            if (op.kind == OpKind::AddState && s == op.state) continue;
            if (!pre_broken.count(s)) {
                out.rejected.push_back("candidate breaks state " + s + " (" + to_string(op) + ")");
                fresh_ok = false;
                break;
            }
        }
        if (!fresh_ok) continue;
        scored.emplace_back(distance_ks(m, cand), std::move(cand));
    }
    if (scored.empty()) return out;
    double best = scored.front().first;
    for (const auto& [d, _] : scored) best = std::min(best, d);
    for (auto& [d, cand] : scored)
        if (d == best) out.models.push_back(std::move(cand));
    return out;
}

} // namespace amr
