#include <loopcut/reductions.hpp>

#include <algorithm>

namespace loopcut {

namespace {

enum class Mode { Rich, Branchy };

// In branchy mode a degree-2 vertex may be bypassed only when some neighbor
// weighs no more than it does (equal weight allowed); in rich mode always.
bool bypass_eligible(const MultiGraph& g, VertexId v, Mode mode) {
    if (mode == Mode::Rich) {
        return true;
    }
    const Weight wv = g.weight(v);
    for (const auto& [u, mult] : g.neighbors(v)) {
        (void)mult;
        if (g.weight(u) <= wv) {
            return true;
        }
    }
    return false;
}

ReductionOutcome reduce(const MultiGraph& g, Mode mode) {
    MultiGraph work = g;
    std::vector<VertexId> forced;
    const auto force = [&](VertexId v) {
        forced.push_back(v);
        work.remove_vertex(v);
    };

    // Pre-existing self-loops force their vertices before any degree rule.
    for (VertexId v : work.vertex_ids()) {
        if (work.self_loop_count(v) > 0) {
            force(v);
        }
    }

    // Sweep vertices in ascending id, applying the first rule that fires,
    // until a full sweep changes nothing.  A bypass whose two edges lead to
    // the same neighbor u would create a self-loop at u, so u is forced and
    // deleted on the spot; live vertices therefore never carry self-loops.
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : work.vertex_ids()) {
            if (!work.contains(v)) {
                continue;  // removed earlier in this sweep
            }
            const int d = work.degree(v);
            if (d <= 1) {
                work.remove_vertex(v);
                changed = true;
                continue;
            }
            if (d == 2 && bypass_eligible(work, v, mode)) {
                const auto& adj = work.neighbors(v);
                if (adj.size() == 1) {
                    const VertexId u = adj.begin()->first;
                    work.remove_vertex(v);
                    force(u);
                } else {
                    const VertexId a = adj.begin()->first;
                    const VertexId b = std::next(adj.begin())->first;
                    work.remove_vertex(v);
                    work.add_edge(a, b);
                }
                changed = true;
            }
        }
    }

    std::sort(forced.begin(), forced.end());
    Weight forced_weight;
    for (VertexId v : forced) {
        forced_weight += g.weight(v);
    }
    return ReductionOutcome{std::move(work), std::move(forced), forced_weight};
}

}  // namespace

ReductionOutcome reduce_to_rich(const MultiGraph& g) { return reduce(g, Mode::Rich); }

ReductionOutcome reduce_to_branchy(const MultiGraph& g) { return reduce(g, Mode::Branchy); }

bool is_rich(const MultiGraph& g) {
    for (VertexId v : g.vertex_ids()) {
        if (g.self_loop_count(v) > 0 || g.degree(v) < 3) {
            return false;
        }
    }
    return true;
}

bool is_branchy(const MultiGraph& g) {
    for (VertexId v : g.vertex_ids()) {
        if (g.self_loop_count(v) > 0 || g.degree(v) < 2) {
            return false;
        }
        if (g.degree(v) == 2) {
            const Weight wv = g.weight(v);
            for (const auto& [u, mult] : g.neighbors(v)) {
                (void)mult;
                if (g.weight(u) <= wv) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace loopcut
