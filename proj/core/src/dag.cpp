#include <loopcut/dag.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include <loopcut/random_fvs.hpp>

namespace loopcut {

void Dag::add_vertex(VertexId v, int domain_size) {
    if (domain_size < 2) {
        throw std::invalid_argument("domain size must be >= 2");
    }
    auto [it, inserted] = domain_.try_emplace(v, domain_size);
    (void)it;
    if (!inserted) {
        throw std::invalid_argument("vertex already present: " + std::to_string(v));
    }
}

void Dag::add_arc(VertexId parent, VertexId child) {
    if (!contains(parent) || !contains(child)) {
        throw std::invalid_argument("no such vertex: " +
                                    std::to_string(contains(parent) ? child : parent));
    }
    if (parent == child) {
        throw std::invalid_argument("input is not a DAG");
    }
    if (!arcs_.emplace(parent, child).second) {
        throw std::invalid_argument("duplicate arc: " + std::to_string(parent) + " -> " +
                                    std::to_string(child));
    }
}

bool Dag::contains(VertexId v) const noexcept { return domain_.count(v) != 0; }

int Dag::domain_size(VertexId v) const {
    auto it = domain_.find(v);
    if (it == domain_.end()) {
        throw std::invalid_argument("no such vertex: " + std::to_string(v));
    }
    return it->second;
}

std::vector<VertexId> Dag::vertex_ids() const {
    std::vector<VertexId> ids;
    ids.reserve(domain_.size());
    for (const auto& [v, dom] : domain_) {
        (void)dom;
        ids.push_back(v);
    }
    return ids;
}

bool Dag::is_acyclic() const {
    std::map<VertexId, int> in_degree;
    for (const auto& [v, dom] : domain_) {
        (void)dom;
        in_degree[v] = 0;
    }
    for (const auto& [p, c] : arcs_) {
        (void)p;
        ++in_degree[c];
    }
    std::deque<VertexId> ready;
    for (const auto& [v, d] : in_degree) {
        if (d == 0) {
            ready.push_back(v);
        }
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        const VertexId v = ready.front();
        ready.pop_front();
        ++seen;
        const auto lo = arcs_.lower_bound({v, 0});
        const auto hi = arcs_.upper_bound({v, UINT32_MAX});
        for (auto it = lo; it != hi; ++it) {
            if (--in_degree[it->second] == 0) {
                ready.push_back(it->second);
            }
        }
    }
    return seen == domain_.size();
}

void Dag::validate() const {
    if (!is_acyclic()) {
        throw std::invalid_argument("input is not a DAG");
    }
}

SplitGraph split_graph(const Dag& d) {
    d.validate();
    SplitGraph s;
    for (VertexId v : d.vertex_ids()) {
        if (v > (UINT32_MAX - 1) / 2) {
            throw std::invalid_argument("vertex id too large to split: " + std::to_string(v));
        }
        const VertexId vin = SplitGraph::in_vertex(v);
        const VertexId vout = SplitGraph::out_vertex(v);
        s.graph.add_vertex(vin, Weight::infinite());
        s.graph.add_vertex(vout, Weight::finite(std::log2(static_cast<double>(d.domain_size(v)))));
        s.graph.add_edge(vin, vout);
        s.origin.emplace(vin, std::make_pair(v, SplitSide::In));
        s.origin.emplace(vout, std::make_pair(v, SplitSide::Out));
    }
    for (const auto& [parent, child] : d.arcs()) {
        s.graph.add_edge(SplitGraph::out_vertex(parent), SplitGraph::in_vertex(child));
    }
    return s;
}

std::vector<VertexId> psi(const std::vector<VertexId>& split_vertices, const SplitGraph& s) {
    std::set<VertexId> originals;
    for (VertexId v : split_vertices) {
        auto it = s.origin.find(v);
        if (it == s.origin.end()) {
            throw std::invalid_argument("no such vertex: " + std::to_string(v));
        }
        originals.insert(it->second.first);
    }
    return std::vector<VertexId>(originals.begin(), originals.end());
}

bool verify_loop_cutset(const Dag& d, const std::vector<VertexId>& s) {
    SplitGraph split = split_graph(d);
    std::vector<VertexId> removed;
    removed.reserve(s.size());
    for (VertexId v : s) {
        if (!d.contains(v)) {
            throw std::invalid_argument("no such vertex: " + std::to_string(v));
        }
        removed.push_back(SplitGraph::out_vertex(v));
    }
    return verify_fvs(split.graph, removed);
}

LoopCutsetResult rlc(const Dag& d, double c, std::uint64_t max_iters, RandomStream rng) {
    SplitGraph split = split_graph(d);
    FvsResult fvs = wra(split.graph, c, max_iters, std::move(rng));
    LoopCutsetResult result;
    result.cutset = psi(fvs.members, split);
    result.log2_weight = fvs.total_weight.finite_value();
    result.trace = std::move(fvs.trace);
    return result;
}

}  // namespace loopcut
