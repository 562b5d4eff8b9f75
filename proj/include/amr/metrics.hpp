#pragma once

#include "amr/kmts.hpp"
#include "amr/kripke.hpp"

namespace amr {

/// Structural distance between two concrete models over the same AP:
/// states in exactly one of them, transitions in exactly one of them, and
/// common states whose labeling differs (each such state counts once).
/// States are compared by id, so renaming a state is a distance-2 change.
/// Initial-state sets do not contribute.
double distance_ks(const KripkeStructure& a, const KripkeStructure& b);

/// Distance between two partial models: state differences, per-edge status
/// changes and relabeled common states. An edge's status is one of absent,
/// may-only or must; any status change counts exactly once, so promoting a
/// may-transition to a must-transition costs 1, not 2. Every basic repair
/// operation is a distance-1 step under this metric.
double distance_kmts(const Kmts& a, const Kmts& b);

} // namespace amr
