#pragma once

#include "amr/kmts.hpp"
#include "amr/kripke.hpp"
#include "amr/ops.hpp"

#include <string>
#include <vector>

namespace amr {

/// A named partition of concrete state ids into abstract blocks. alpha maps
/// a concrete state to its block, gamma a block to its members.
class AbstractionMap {
public:
    struct Block {
        std::string name;
        std::vector<std::string> members;
    };

    AbstractionMap() = default;
    explicit AbstractionMap(std::vector<Block> blocks);

    const std::vector<Block>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    bool has_block(const std::string& name) const;
    int block_index(const std::string& name) const;
    const Block& block(int i) const { return blocks_[i]; }

    /// alpha: block name of a concrete state id; throws on unmapped states.
    const std::string& alpha(const std::string& concrete) const;
    bool maps(const std::string& concrete) const;

    AbstractionMap with_block_added(Block b) const;
    AbstractionMap with_block_removed(const std::string& name) const;
    /// Replaces one block by two; the replacements keep the position of the
    /// original and the whole list is reordered by first member.
    AbstractionMap with_block_split(const std::string& name, Block first, Block second,
                                    const KripkeStructure& m) const;

private:
    std::vector<Block> blocks_;
    std::map<std::string, int> block_index_;
    std::map<std::string, int> alpha_;
    void reindex();
};

/// Empty when the map is a partition of exactly m's states.
std::vector<std::string> validate_partition(const KripkeStructure& m, const AbstractionMap& p);

/// Blocks are label-equivalence classes, ordered by their first state in
/// declared order and named a0, a1, ...
AbstractionMap default_partition(const KripkeStructure& m);

/// One block per state, named after the state itself.
AbstractionMap singleton_partition(const KripkeStructure& m);

/// The abstract model induced by a partition: a block is initial iff it
/// contains an initial state, labeled by the literals all members share,
/// with a must-transition where every member steps into the target block
/// and a may-transition where at least one does.
Kmts abstract(const KripkeStructure& m, const AbstractionMap& p);

struct MixedSimulationResult {
    bool ok = true;
    int clause = 0; // first violated clause (1..3)
    std::string concrete, abstract_state, detail;
};

/// Checks that a relation between concrete and abstract states is a mixed
/// simulation: abstract labels hold concretely, every concrete step is
/// matched by a may-step, every must-step is matched by a concrete step.
MixedSimulationResult mixed_simulation(const KripkeStructure& m, const Kmts& a,
                                       const std::vector<std::pair<std::string, std::string>>& h);

/// The graph of alpha as a relation, for feeding mixed_simulation.
std::vector<std::pair<std::string, std::string>> alpha_relation(const KripkeStructure& m,
                                                                const AbstractionMap& p);

/// Is `candidate` one of the concrete models of `abs` under the given map?
/// Initial states and labels are checked per block, and abstracting the
/// candidate's transitions must reproduce abs's must/may relations exactly.
bool is_concretization_of(const KripkeStructure& candidate, const Kmts& abs,
                          const AbstractionMap& p);

struct ConcretizationResult {
    /// Minimal-distance concrete models realizing the operation. Models may
    /// carry unresolved states created by AddState (no labels or outgoing
    /// transitions yet); those are completed by later operations.
    std::vector<KripkeStructure> models;
    /// Candidates excluded because they would break an invariant the input
    /// model satisfied (e.g. a removal emptying some state's successors).
    std::vector<std::string> rejected;
};

/// All minimal-distance concretizations of one basic repair operation
/// applied to abstract(m, p). `expected` must equal that application;
/// a mismatch throws std::invalid_argument.
ConcretizationResult concretize_min(const KripkeStructure& m, const AbstractionMap& p,
                                    const BasicRepairOp& op, const Kmts& expected);

} // namespace amr
