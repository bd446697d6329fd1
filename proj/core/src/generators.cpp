#include <loopcut/generators.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace loopcut {

namespace {

void check_spec(const CorpusSpec& spec) {
    if (spec.domain_lo < 2 || spec.domain_hi < spec.domain_lo) {
        throw std::invalid_argument("domain range must satisfy 2 <= lo <= hi");
    }
}

// Draws `take` distinct entries from `pool` by a partial Fisher-Yates shuffle.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t take,
                                          RandomStream& rng) {
    if (take > pool.size()) {
        throw std::invalid_argument("not enough candidates to sample");
    }
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(
                                      rng.uniform_below(static_cast<std::uint64_t>(pool.size() - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(take);
    return pool;
}

}  // namespace

Dag gen_random_dag(const CorpusSpec& spec, RandomStream& rng) {
    check_spec(spec);
    const std::size_t n = spec.n_vertices;
    const std::size_t max_arcs = n * (n - 1) / 2;
    if (spec.n_edges > max_arcs) {
        throw std::invalid_argument("too many arcs for an acyclic graph on " + std::to_string(n) +
                                    " vertices");
    }
    // Random topological order: rank[v] gives v's position in it.
    std::vector<VertexId> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = static_cast<VertexId>(i);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
        std::swap(order[i], order[j]);
    }
    Dag d;
    for (std::size_t i = 0; i < n; ++i) {
        d.add_vertex(static_cast<VertexId>(i),
                     static_cast<int>(rng.uniform_in(spec.domain_lo, spec.domain_hi)));
    }
    std::vector<std::pair<VertexId, VertexId>> candidates;
    candidates.reserve(max_arcs);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            candidates.emplace_back(order[i], order[j]);
        }
    }
    for (const auto& [p, c] : sample_without_replacement(std::move(candidates), spec.n_edges, rng)) {
        d.add_arc(p, c);
    }
    return d;
}

MultiGraph gen_random_graph(const CorpusSpec& spec, RandomStream& rng, bool weighted) {
    check_spec(spec);
    const std::size_t n = spec.n_vertices;
    const std::size_t max_edges = n * (n - 1) / 2;
    if (spec.n_edges > max_edges) {
        throw std::invalid_argument("too many edges for a simple graph on " + std::to_string(n) +
                                    " vertices");
    }
    MultiGraph g;
    for (std::size_t i = 0; i < n; ++i) {
        Weight w = Weight::finite(1.0);
        if (weighted) {
            const std::uint64_t domain = rng.uniform_in(spec.domain_lo, spec.domain_hi);
            w = Weight::finite(std::log2(static_cast<double>(domain)));
        }
        g.add_vertex(static_cast<VertexId>(i), w);
    }
    std::vector<std::pair<VertexId, VertexId>> candidates;
    candidates.reserve(max_edges);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            candidates.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    for (const auto& [u, v] : sample_without_replacement(std::move(candidates), spec.n_edges, rng)) {
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace loopcut
