#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace loopcut {

using VertexId = std::uint32_t;

/// Vertex weight: a strictly positive finite value or the absorbing
/// Infinite value.  Infinite compares greater than every finite weight and
/// absorbs under addition.  Zero exists only as the additive identity for
/// sums over empty sets; vertex weights themselves must be > 0.
class Weight {
public:
    constexpr Weight() noexcept = default;  // zero
    static constexpr Weight zero() noexcept { return Weight{}; }
    static constexpr Weight infinite() noexcept {
        Weight w;
        w.infinite_ = true;
        return w;
    }
    static Weight finite(double value);  // throws unless value > 0

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0.0; }
    double finite_value() const;        // throws if infinite
    double as_double() const noexcept;  // +inf when infinite

    Weight& operator+=(Weight rhs) noexcept;
    friend Weight operator+(Weight a, Weight b) noexcept {
        a += b;
        return a;
    }
    friend bool operator==(Weight a, Weight b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator<(Weight a, Weight b) noexcept {
        return a.as_double() < b.as_double();
    }
    friend bool operator<=(Weight a, Weight b) noexcept {
        return a.as_double() <= b.as_double();
    }
    friend bool operator>(Weight a, Weight b) noexcept { return b < a; }
    friend bool operator>=(Weight a, Weight b) noexcept { return b <= a; }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

/// Bookkeeping attached to every solver result.
struct RunTrace {
    std::uint64_t trials_run = 1;
    std::uint32_t k_reached = 0;
    std::uint64_t seed = 0;
    bool budget_saturated = false;
    /// Incumbent weights in the order they were adopted (anytime solvers only).
    std::vector<double> incumbent_weights;
};

struct FvsResult {
    std::vector<VertexId> members;  // ascending ids
    Weight total_weight;
    RunTrace trace;
};

/// Undirected multigraph with weighted vertices.  Parallel edges are kept as
/// per-pair multiplicities and self-loops as per-vertex counts.  A self-loop
/// contributes 2 to the degree of its vertex.  Vertex ids are stable across
/// mutations; no renumbering ever happens.
class MultiGraph {
public:
    void add_vertex(VertexId v, Weight w = Weight::finite(1.0));
    void add_edge(VertexId u, VertexId v, int multiplicity = 1);  // u == v adds self-loops
    void remove_vertex(VertexId v);

    bool contains(VertexId v) const noexcept;
    int degree(VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    int self_loop_count(VertexId v) const;
    Weight weight(VertexId v) const;
    const std::map<VertexId, int>& neighbors(VertexId v) const;

    std::vector<VertexId> vertex_ids() const;  // ascending
    std::size_t vertex_count() const noexcept { return verts_.size(); }
    std::size_t edge_count() const;  // each parallel edge and self-loop counted
    bool empty() const noexcept { return verts_.empty(); }

    /// True iff the graph has no cycle: no self-loop, no parallel pair, and
    /// no cycle through distinct edges.
    bool is_forest() const;

    Weight total_weight(const std::vector<VertexId>& members) const;

    /// Structural self-check used by property tests: adjacency symmetry and
    /// the degree/edge-count identities.
    bool invariants_ok() const;

private:
    struct VertexRecord {
        std::map<VertexId, int> adj;
        int self_loops = 0;
        Weight weight;
    };

    const VertexRecord& record(VertexId v) const;
    VertexRecord& record(VertexId v);

    std::map<VertexId, VertexRecord> verts_;
};

/// True iff removing `f` from `g` leaves a forest.  Members must exist in `g`;
/// duplicates are tolerated.
bool verify_fvs(const MultiGraph& g, const std::vector<VertexId>& f);

}  // namespace loopcut
