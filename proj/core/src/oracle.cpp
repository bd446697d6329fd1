#include <loopcut/oracle.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include <loopcut/reductions.hpp>

namespace loopcut {

namespace {

// Lexicographic order on subsets read as ascending index sequences.  At the
// lowest differing index i, the mask holding i has the smaller element there
// unless the other mask is exhausted (prefix case).
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) {
        return false;
    }
    const int i = std::countr_zero(a ^ b);
    if ((b >> i) & 1u) {
        return (a >> (i + 1)) == 0;  // a is a strict prefix of b
    }
    return (b >> (i + 1)) != 0;  // symmetric
}

struct SearchState {
    double weight = 0.0;
    std::uint32_t size = 0;
    std::uint64_t mask = 0;
    std::int32_t last = -1;  // highest candidate index present

    bool operator>(const SearchState& rhs) const {
        if (weight != rhs.weight) {
            return weight > rhs.weight;
        }
        if (size != rhs.size) {
            return size > rhs.size;
        }
        return mask_lex_less(rhs.mask, mask);
    }
};

// Best-first search over subsets of `candidates` (ascending ids) inside
// `host`, expanding each subset once by appending a higher index.  Since every
// candidate weight is positive, keys never decrease along an expansion, so the
// first subset whose removal leaves the host a forest is the minimum under
// (weight, cardinality, lexicographic ids).
std::vector<VertexId> min_removal_set(const MultiGraph& host,
                                      const std::vector<VertexId>& candidates) {
    const std::size_t n = candidates.size();
    std::vector<double> cand_weight(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Weight w = host.weight(candidates[i]);
        cand_weight[i] = w.as_double();
    }

    std::priority_queue<SearchState, std::vector<SearchState>, std::greater<SearchState>> frontier;
    frontier.push(SearchState{});
    std::vector<VertexId> removal;
    removal.reserve(n);
    while (!frontier.empty()) {
        const SearchState state = frontier.top();
        frontier.pop();
        removal.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if ((state.mask >> i) & 1u) {
                removal.push_back(candidates[i]);
            }
        }
        if (verify_fvs(host, removal)) {
            return removal;
        }
        for (std::size_t i = static_cast<std::size_t>(state.last + 1); i < n; ++i) {
            SearchState child = state;
            child.weight += cand_weight[i];
            child.size += 1;
            child.mask |= std::uint64_t{1} << i;
            child.last = static_cast<std::int32_t>(i);
            frontier.push(child);
        }
    }
    // Removing every candidate is tried last; when even that fails the host
    // has a cycle disjoint from the candidate set.
    throw std::invalid_argument("no feedback vertex set within the candidate vertices");
}

}  // namespace

FvsResult brute_force_min_wfvs(const MultiGraph& g, std::size_t cap) {
    if (g.vertex_count() > cap || cap > 63) {
        throw oracle_cap_error("instance too large for oracle (|V| = " +
                               std::to_string(g.vertex_count()) + ", cap = " +
                               std::to_string(cap) + ")");
    }
    FvsResult result;
    result.members = min_removal_set(g, g.vertex_ids());
    result.total_weight = g.total_weight(result.members);
    result.trace.k_reached = static_cast<std::uint32_t>(result.members.size());
    return result;
}

std::size_t brute_force_min_fvs_size(const MultiGraph& g, std::size_t cap) {
    MultiGraph unit;
    for (VertexId v : g.vertex_ids()) {
        unit.add_vertex(v);
    }
    for (VertexId v : g.vertex_ids()) {
        for (const auto& [u, mult] : g.neighbors(v)) {
            if (u > v) {
                unit.add_edge(v, u, mult);
            }
        }
        if (g.self_loop_count(v) > 0) {
            unit.add_edge(v, v, g.self_loop_count(v));
        }
    }
    return brute_force_min_wfvs(unit, cap).members.size();
}

LoopCutsetOracle brute_force_min_loop_cutset(const Dag& d, std::size_t cap) {
    d.validate();
    if (d.vertex_count() > cap || cap > 63) {
        throw oracle_cap_error("instance too large for oracle (|V| = " +
                               std::to_string(d.vertex_count()) + ", cap = " +
                               std::to_string(cap) + ")");
    }
    SplitGraph split = split_graph(d);
    std::vector<VertexId> out_vertices;
    out_vertices.reserve(d.vertex_count());
    for (VertexId v : d.vertex_ids()) {
        out_vertices.push_back(SplitGraph::out_vertex(v));
    }
    LoopCutsetOracle oracle;
    oracle.cutset = psi(min_removal_set(split.graph, out_vertices), split);
    double weight = 0.0;
    for (VertexId v : oracle.cutset) {
        weight += std::log2(static_cast<double>(d.domain_size(v)));
    }
    oracle.log2_weight = weight;
    return oracle;
}

FvsResult greedy_ga(const MultiGraph& g) {
    MultiGraph work = g;
    std::vector<VertexId> members;
    for (;;) {
        ReductionOutcome outcome = reduce_to_branchy(work);
        members.insert(members.end(), outcome.forced.begin(), outcome.forced.end());
        work = std::move(outcome.reduced);
        if (work.empty()) {
            break;
        }
        VertexId best = 0;
        double best_ratio = -1.0;
        for (VertexId v : work.vertex_ids()) {
            const Weight w = work.weight(v);
            if (w.is_infinite()) {
                continue;
            }
            const double ratio = static_cast<double>(work.degree(v)) / w.finite_value();
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best = v;
            }
        }
        if (best_ratio < 0.0) {
            throw std::invalid_argument("no selectable vertex");
        }
        members.push_back(best);
        work.remove_vertex(best);
    }
    std::sort(members.begin(), members.end());
    FvsResult result;
    result.members = std::move(members);
    result.total_weight = g.total_weight(result.members);
    result.trace.k_reached = static_cast<std::uint32_t>(result.members.size());
    return result;
}

}  // namespace loopcut
