#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <loopcut/multigraph.hpp>
#include <loopcut/rng.hpp>

namespace loopcut {

/// Directed acyclic graph whose vertices carry a domain size (>= 2).  Arcs are
/// unique; self-arcs and duplicate arcs are rejected.  Acyclicity is checked
/// by validate() and by every consumer that needs it.
class Dag {
public:
    void add_vertex(VertexId v, int domain_size);
    void add_arc(VertexId parent, VertexId child);

    bool contains(VertexId v) const noexcept;
    int domain_size(VertexId v) const;
    std::vector<VertexId> vertex_ids() const;  // ascending
    const std::set<std::pair<VertexId, VertexId>>& arcs() const noexcept { return arcs_; }
    std::size_t vertex_count() const noexcept { return domain_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    bool is_acyclic() const;
    void validate() const;  // throws "input is not a DAG" when cyclic

private:
    std::map<VertexId, int> domain_;
    std::set<std::pair<VertexId, VertexId>> arcs_;
};

enum class SplitSide { In, Out };

/// Undirected companion of a DAG: vertex v becomes v_in (id 2v, infinite
/// weight) and v_out (id 2v+1, weight log2(domain)), joined by an edge; an arc
/// u -> v becomes the edge u_out -- v_in.  Cutting a vertex of the DAG
/// corresponds to removing its out-vertex here.
struct SplitGraph {
    MultiGraph graph;
    std::map<VertexId, std::pair<VertexId, SplitSide>> origin;  // split id -> (original, side)

    static VertexId in_vertex(VertexId original) noexcept { return original * 2; }
    static VertexId out_vertex(VertexId original) noexcept { return original * 2 + 1; }
};

SplitGraph split_graph(const Dag& d);

/// Maps split-graph vertices back to original DAG vertices (deduplicated,
/// ascending).  Throws on ids that are not in the split graph.
std::vector<VertexId> psi(const std::vector<VertexId>& split_vertices, const SplitGraph& s);

/// True iff every loop of `d` passes through some vertex of `s` at a position
/// where that vertex has an outgoing arc on the loop.  Checked structurally:
/// removing the out-vertices of `s` from the split graph must leave a forest.
bool verify_loop_cutset(const Dag& d, const std::vector<VertexId>& s);

struct LoopCutsetResult {
    std::vector<VertexId> cutset;  // ascending original ids
    double log2_weight = 0.0;      // sum of log2(domain) over the cutset
    RunTrace trace;
};

/// Randomized minimum-weight loop cutset search: split the DAG, run the
/// anytime FVS solver, and map the result back.
LoopCutsetResult rlc(const Dag& d, double c, std::uint64_t max_iters, RandomStream rng);

}  // namespace loopcut
