#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <loopcut/dag.hpp>
#include <loopcut/multigraph.hpp>

namespace loopcut {

/// Raised when an exact search is asked about an instance above its vertex cap.
class oracle_cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact minimum-weight FVS by best-first subset search (nondecreasing total
/// weight, ties to smaller cardinality, then lexicographic member ids).
/// Throws oracle_cap_error when |V| > cap.
FvsResult brute_force_min_wfvs(const MultiGraph& g, std::size_t cap = 20);

/// Minimum FVS cardinality, ignoring weights.
std::size_t brute_force_min_fvs_size(const MultiGraph& g, std::size_t cap = 20);

struct LoopCutsetOracle {
    std::vector<VertexId> cutset;
    double log2_weight = 0.0;
};

/// Exact minimum-weight loop cutset via the split graph, searching subsets of
/// out-vertices only.  Throws oracle_cap_error when |V| > cap.
LoopCutsetOracle brute_force_min_loop_cutset(const Dag& d, std::size_t cap = 12);

/// Deterministic baseline: alternate the weight-preserving reduction with
/// greedily deleting the vertex maximizing degree/weight (ties: lowest id).
FvsResult greedy_ga(const MultiGraph& g);

}  // namespace loopcut
