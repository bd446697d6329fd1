#include <loopcut/random_fvs.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <loopcut/reductions.hpp>

namespace loopcut {

namespace {

double selection_mass(const MultiGraph& g, VertexId v, SelectionMode mode) {
    const Weight w = g.weight(v);
    if (w.is_infinite()) {
        return 0.0;  // never selectable
    }
    const double d = static_cast<double>(g.degree(v));
    return mode == SelectionMode::DegreeProportional ? d : d / w.finite_value();
}

FvsResult make_result(const MultiGraph& original, std::set<VertexId> members, RunTrace trace) {
    FvsResult result;
    result.members.assign(members.begin(), members.end());
    result.total_weight = original.total_weight(result.members);
    result.trace = std::move(trace);
    return result;
}

// Shared loop of the two bounded guessers: alternate reduction with one random
// pick until the graph is consumed or the pick budget k is exhausted.  Forced
// vertices count toward k.
std::optional<FvsResult> guess_loop(const MultiGraph& g, std::uint32_t k, SelectionMode mode,
                                    bool weighted, RandomStream& rng) {
    if (k == 0) {
        throw std::invalid_argument("k must be >= 1");
    }
    MultiGraph work = g;
    std::set<VertexId> members;
    for (;;) {
        ReductionOutcome outcome = weighted ? reduce_to_branchy(work) : reduce_to_rich(work);
        members.insert(outcome.forced.begin(), outcome.forced.end());
        work = std::move(outcome.reduced);
        if (members.size() > k) {
            return std::nullopt;
        }
        if (work.empty()) {
            RunTrace trace;
            trace.k_reached = k;
            trace.seed = rng.seed();
            return make_result(g, std::move(members), std::move(trace));
        }
        if (members.size() == k) {
            return std::nullopt;  // another pick would exceed the budget
        }
        const VertexId v = sample_vertex(work, mode, rng);
        members.insert(v);
        work.remove_vertex(v);
    }
}

}  // namespace

std::vector<std::pair<VertexId, double>> selection_probabilities(const MultiGraph& g,
                                                                 SelectionMode mode) {
    std::vector<std::pair<VertexId, double>> probs;
    double total = 0.0;
    for (VertexId v : g.vertex_ids()) {
        if (g.weight(v).is_infinite()) {
            continue;
        }
        const double mass = selection_mass(g, v, mode);
        probs.emplace_back(v, mass);
        total += mass;
    }
    if (total <= 0.0) {
        throw std::invalid_argument("no selectable vertex");
    }
    for (auto& [v, mass] : probs) {
        (void)v;
        mass /= total;
    }
    return probs;
}

VertexId sample_vertex(const MultiGraph& g, SelectionMode mode, RandomStream& rng) {
    double total = 0.0;
    for (VertexId v : g.vertex_ids()) {
        total += selection_mass(g, v, mode);
    }
    if (total <= 0.0) {
        throw std::invalid_argument("no selectable vertex");
    }
    const double r = rng.uniform01() * total;
    double cum = 0.0;
    VertexId last = 0;
    bool found = false;
    for (VertexId v : g.vertex_ids()) {
        const double mass = selection_mass(g, v, mode);
        if (mass <= 0.0) {
            continue;
        }
        last = v;
        found = true;
        cum += mass;
        if (r < cum) {
            return v;
        }
    }
    (void)found;
    return last;  // r landed on the rounding tail
}

std::uint64_t amplification_trials(double c, std::uint32_t k, double base, bool* saturated,
                                   std::uint64_t cap) {
    const double raw = c * std::pow(base, static_cast<double>(k));
    const bool sat = !(raw < static_cast<double>(cap));
    if (saturated != nullptr) {
        *saturated = sat;
    }
    if (sat) {
        return cap;
    }
    return static_cast<std::uint64_t>(std::ceil(raw));
}

std::optional<FvsResult> single_guess(const MultiGraph& g, std::uint32_t k, RandomStream rng) {
    return guess_loop(g, k, SelectionMode::DegreeProportional, /*weighted=*/false, rng);
}

std::optional<FvsResult> single_wguess_i(const MultiGraph& g, std::uint32_t k, RandomStream rng) {
    return guess_loop(g, k, SelectionMode::DegreeProportional, /*weighted=*/true, rng);
}

FvsResult single_wguess_ii(const MultiGraph& g, RandomStream rng) {
    MultiGraph work = g;
    std::set<VertexId> members;
    for (;;) {
        ReductionOutcome outcome = reduce_to_branchy(work);
        members.insert(outcome.forced.begin(), outcome.forced.end());
        work = std::move(outcome.reduced);
        if (work.empty()) {
            RunTrace trace;
            trace.k_reached = static_cast<std::uint32_t>(members.size());
            trace.seed = rng.seed();
            return make_result(g, std::move(members), std::move(trace));
        }
        const VertexId v = sample_vertex(work, SelectionMode::DegreeOverWeight, rng);
        members.insert(v);
        work.remove_vertex(v);
    }
}

FvsResult repeated_guess(const MultiGraph& g, double c, RandomStream rng) {
    if (c < 1.0) {
        throw std::invalid_argument("c must be >= 1");
    }
    const std::uint32_t n = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(g.vertex_count()));
    std::uint64_t trial_index = 0;
    bool any_saturated = false;
    for (std::uint32_t k = 1; k <= n; ++k) {
        bool saturated = false;
        const std::uint64_t trials = amplification_trials(c, k, 4.0, &saturated);
        any_saturated = any_saturated || saturated;
        for (std::uint64_t t = 0; t < trials; ++t) {
            auto attempt = single_guess(g, k, rng.substream(trial_index));
            ++trial_index;
            if (attempt.has_value()) {
                attempt->trace.trials_run = trial_index;
                attempt->trace.k_reached = k;
                attempt->trace.seed = rng.seed();
                attempt->trace.budget_saturated = any_saturated;
                return *attempt;
            }
        }
    }
    // k = |V| admits every vertex, so the sweep cannot end without a success.
    throw std::logic_error("repeated_guess exhausted its sweep");
}

std::optional<FvsResult> repeated_wguess_i(const MultiGraph& g, double c, std::uint32_t k,
                                           RandomStream rng) {
    if (c < 1.0) {
        throw std::invalid_argument("c must be >= 1");
    }
    bool saturated = false;
    const std::uint64_t trials = amplification_trials(c, k, 6.0, &saturated);
    std::optional<FvsResult> best;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto attempt = single_wguess_i(g, k, rng.substream(t));
        if (attempt.has_value() &&
            (!best.has_value() || attempt->total_weight < best->total_weight)) {
            best = std::move(attempt);
        }
    }
    if (best.has_value()) {
        best->trace.trials_run = trials;
        best->trace.k_reached = k;
        best->trace.seed = rng.seed();
        best->trace.budget_saturated = saturated;
    }
    return best;
}

FvsResult wra(const MultiGraph& g, double c, std::uint64_t max_iters, RandomStream rng) {
    if (c < 1.0) {
        throw std::invalid_argument("c must be >= 1");
    }
    const std::uint32_t n = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(g.vertex_count()));
    bool saturated = false;
    const auto budget = [&](Weight w) -> std::uint64_t {
        const double raw = c * std::pow(6.0, w.as_double());
        if (!(raw < static_cast<double>(max_iters))) {
            saturated = true;
            return max_iters;
        }
        return static_cast<std::uint64_t>(std::floor(raw));
    };

    auto first = single_wguess_i(g, n, rng.substream(0));
    if (!first.has_value()) {
        throw std::logic_error("unbounded weighted guess failed");
    }
    FvsResult incumbent = std::move(*first);
    RunTrace trace;
    trace.seed = rng.seed();
    trace.k_reached = n;
    trace.incumbent_weights.push_back(incumbent.total_weight.as_double());
    std::uint64_t limit = budget(incumbent.total_weight);
    std::uint64_t i = 1;
    std::uint64_t runs = 1;
    while (i <= limit) {
        auto attempt = single_wguess_i(g, n, rng.substream(i));
        ++runs;
        if (!attempt.has_value()) {
            throw std::logic_error("unbounded weighted guess failed");
        }
        if (attempt->total_weight <= incumbent.total_weight) {
            incumbent = std::move(*attempt);
            trace.incumbent_weights.push_back(incumbent.total_weight.as_double());
            limit = budget(incumbent.total_weight);
        }
        ++i;
    }
    trace.trials_run = runs;
    trace.budget_saturated = saturated;
    incumbent.trace = std::move(trace);
    return incumbent;
}

}  // namespace loopcut
