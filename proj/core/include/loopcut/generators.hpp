#pragma once

#include <cstddef>
#include <cstdint>

#include <loopcut/dag.hpp>
#include <loopcut/multigraph.hpp>
#include <loopcut/rng.hpp>

namespace loopcut {

/// Shape of a generated instance family.  The same (spec, stream) pair always
/// regenerates identical instances.
struct CorpusSpec {
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;  // arcs for DAGs, edges for graphs
    int domain_lo = 2;
    int domain_hi = 2;
    std::size_t n_instances = 1;
    std::uint64_t seed = 0;
};

/// Random DAG: a uniformly shuffled topological order plus n_edges arcs drawn
/// uniformly without replacement from the order-respecting pairs; domain sizes
/// uniform in [domain_lo, domain_hi].  Throws when n_edges > n(n-1)/2.
Dag gen_random_dag(const CorpusSpec& spec, RandomStream& rng);

/// Random simple undirected graph: n_edges distinct pairs drawn uniformly.
/// With weighted = true each vertex gets weight log2(domain), domain uniform
/// in [domain_lo, domain_hi]; otherwise unit weights.
MultiGraph gen_random_graph(const CorpusSpec& spec, RandomStream& rng, bool weighted);

}  // namespace loopcut
