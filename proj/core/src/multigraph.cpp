#include <loopcut/multigraph.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace loopcut {

Weight Weight::finite(double value) {
    if (!(value > 0.0) || value == std::numeric_limits<double>::infinity()) {
        throw std::invalid_argument("finite weight must be > 0");
    }
    Weight w;
    w.value_ = value;
    return w;
}

double Weight::finite_value() const {
    if (infinite_) {
        throw std::invalid_argument("weight is infinite");
    }
    return value_;
}

double Weight::as_double() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

Weight& Weight::operator+=(Weight rhs) noexcept {
    if (rhs.infinite_) {
        infinite_ = true;
    }
    if (!infinite_) {
        value_ += rhs.value_;
    }
    return *this;
}

namespace {

// Union-find over a fixed vertex set, used by the forest checks.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

[[noreturn]] void no_such_vertex(VertexId v) {
    throw std::invalid_argument("no such vertex: " + std::to_string(v));
}

}  // namespace

const MultiGraph::VertexRecord& MultiGraph::record(VertexId v) const {
    auto it = verts_.find(v);
    if (it == verts_.end()) {
        no_such_vertex(v);
    }
    return it->second;
}

MultiGraph::VertexRecord& MultiGraph::record(VertexId v) {
    auto it = verts_.find(v);
    if (it == verts_.end()) {
        no_such_vertex(v);
    }
    return it->second;
}

void MultiGraph::add_vertex(VertexId v, Weight w) {
    if (!w.is_infinite() && w.is_zero()) {
        throw std::invalid_argument("vertex weight must be positive or infinite");
    }
    auto [it, inserted] = verts_.try_emplace(v);
    if (!inserted) {
        throw std::invalid_argument("vertex already present: " + std::to_string(v));
    }
    it->second.weight = w;
}

void MultiGraph::add_edge(VertexId u, VertexId v, int multiplicity) {
    if (multiplicity < 1) {
        throw std::invalid_argument("edge multiplicity must be >= 1");
    }
    if (u == v) {
        record(u).self_loops += multiplicity;
        return;
    }
    VertexRecord& ru = record(u);
    VertexRecord& rv = record(v);
    ru.adj[v] += multiplicity;
    rv.adj[u] += multiplicity;
}

void MultiGraph::remove_vertex(VertexId v) {
    VertexRecord& rv = record(v);
    for (const auto& [u, mult] : rv.adj) {
        (void)mult;
        verts_.at(u).adj.erase(v);
    }
    verts_.erase(v);
}

bool MultiGraph::contains(VertexId v) const noexcept { return verts_.count(v) != 0; }

int MultiGraph::degree(VertexId v) const {
    const VertexRecord& r = record(v);
    int d = 2 * r.self_loops;
    for (const auto& [u, mult] : r.adj) {
        (void)u;
        d += mult;
    }
    return d;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    if (u == v) {
        return 0;
    }
    const VertexRecord& r = record(u);
    if (!contains(v)) {
        no_such_vertex(v);
    }
    auto it = r.adj.find(v);
    return it == r.adj.end() ? 0 : it->second;
}

int MultiGraph::self_loop_count(VertexId v) const { return record(v).self_loops; }

Weight MultiGraph::weight(VertexId v) const { return record(v).weight; }

const std::map<VertexId, int>& MultiGraph::neighbors(VertexId v) const { return record(v).adj; }

std::vector<VertexId> MultiGraph::vertex_ids() const {
    std::vector<VertexId> ids;
    ids.reserve(verts_.size());
    for (const auto& [v, r] : verts_) {
        (void)r;
        ids.push_back(v);
    }
    return ids;
}

std::size_t MultiGraph::edge_count() const {
    std::size_t twice_edges = 0;
    std::size_t loops = 0;
    for (const auto& [v, r] : verts_) {
        (void)v;
        loops += static_cast<std::size_t>(r.self_loops);
        for (const auto& [u, mult] : r.adj) {
            (void)u;
            twice_edges += static_cast<std::size_t>(mult);
        }
    }
    return twice_edges / 2 + loops;
}

bool MultiGraph::is_forest() const {
    std::map<VertexId, std::size_t> index;
    for (const auto& [v, r] : verts_) {
        if (r.self_loops > 0) {
            return false;
        }
        index.emplace(v, index.size());
    }
    DisjointSets sets(index.size());
    for (const auto& [v, r] : verts_) {
        for (const auto& [u, mult] : r.adj) {
            if (u < v) {
                continue;  // each pair once
            }
            if (mult >= 2 || !sets.unite(index.at(v), index.at(u))) {
                return false;
            }
        }
    }
    return true;
}

Weight MultiGraph::total_weight(const std::vector<VertexId>& members) const {
    Weight sum;
    std::set<VertexId> seen;
    for (VertexId v : members) {
        if (seen.insert(v).second) {
            sum += weight(v);
        }
    }
    return sum;
}

bool MultiGraph::invariants_ok() const {
    std::size_t twice_edges = 0;
    std::size_t degree_sum = 0;
    for (const auto& [v, r] : verts_) {
        degree_sum += static_cast<std::size_t>(degree(v));
        for (const auto& [u, mult] : r.adj) {
            if (mult < 1 || u == v) {
                return false;
            }
            auto other = verts_.find(u);
            if (other == verts_.end()) {
                return false;
            }
            auto back = other->second.adj.find(v);
            if (back == other->second.adj.end() || back->second != mult) {
                return false;
            }
            twice_edges += static_cast<std::size_t>(mult);
        }
        if (r.self_loops < 0) {
            return false;
        }
        twice_edges += 2 * static_cast<std::size_t>(r.self_loops);
    }
    return degree_sum == twice_edges && twice_edges == 2 * edge_count();
}

bool verify_fvs(const MultiGraph& g, const std::vector<VertexId>& f) {
    std::set<VertexId> removed;
    for (VertexId v : f) {
        if (!g.contains(v)) {
            no_such_vertex(v);
        }
        removed.insert(v);
    }
    std::map<VertexId, std::size_t> index;
    for (VertexId v : g.vertex_ids()) {
        if (removed.count(v)) {
            continue;
        }
        if (g.self_loop_count(v) > 0) {
            return false;
        }
        index.emplace(v, index.size());
    }
    DisjointSets sets(index.size());
    for (const auto& [v, vi] : index) {
        for (const auto& [u, mult] : g.neighbors(v)) {
            if (u < v || removed.count(u)) {
                continue;
            }
            if (mult >= 2 || !sets.unite(vi, index.at(u))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace loopcut
