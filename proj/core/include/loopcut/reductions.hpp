#pragma once

#include <loopcut/multigraph.hpp>

namespace loopcut {

/// Result of an optimum-preserving reduction.  `forced` lists vertices (in
/// original ids, ascending) that belong to some minimum feedback vertex set of
/// the input and were removed from `reduced`; `forced_weight` is their total
/// weight under the input graph's weights.
struct ReductionOutcome {
    MultiGraph reduced;
    std::vector<VertexId> forced;
    Weight forced_weight;
};

/// Shrinks `g` until every remaining vertex has degree >= 3 and no
/// self-loops remain.  Rules, applied to vertices in ascending id within a
/// sweep, sweeping until a fixpoint:
///   - a vertex carrying a self-loop is forced and deleted (pre-existing
///     self-loops are cleared before any degree rule runs);
///   - degree <= 1 vertices are deleted;
///   - a degree-2 vertex is bypassed: it is deleted and its two edges are
///     replaced by one edge between its neighbors.  If both edges go to the
///     same neighbor u, the replacement is a self-loop at u, so u is forced
///     and deleted on the spot.
/// Preserves the minimum FVS *size* (weights are ignored).
ReductionOutcome reduce_to_rich(const MultiGraph& g);

/// Weighted variant: a degree-2 vertex is bypassed only when some neighbor
/// weighs no more than it does.  At the fixpoint every surviving degree-2
/// vertex has strictly heavier neighbors on both sides, so no two degree-2
/// vertices are adjacent.  Preserves the minimum FVS *weight*; forced
/// vertices are members of some minimum-weight FVS.
ReductionOutcome reduce_to_branchy(const MultiGraph& g);

/// Postcondition checks for the two reductions (used by tests and callers
/// that want to assert shape).
bool is_rich(const MultiGraph& g);
bool is_branchy(const MultiGraph& g);

}  // namespace loopcut
