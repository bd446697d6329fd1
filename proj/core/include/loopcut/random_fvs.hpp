#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <loopcut/multigraph.hpp>
#include <loopcut/rng.hpp>

namespace loopcut {

enum class SelectionMode {
    DegreeProportional,  // mass(v) = d(v); equals picking a random edge end
    DegreeOverWeight,    // mass(v) = d(v) / w(v)
};

/// Exact selection probabilities over the finite-weight vertices of `g`,
/// ascending by id.  Infinite-weight vertices carry no mass and are left out;
/// the rest renormalize.
std::vector<std::pair<VertexId, double>> selection_probabilities(const MultiGraph& g,
                                                                 SelectionMode mode);

/// Draws one vertex with the mode's probability.  Throws if no vertex carries
/// positive mass ("no selectable vertex").
VertexId sample_vertex(const MultiGraph& g, SelectionMode mode, RandomStream& rng);

/// Number of amplification trials ceil(c * base^k), saturated at `cap`.
std::uint64_t amplification_trials(double c, std::uint32_t k, double base,
                                   bool* saturated = nullptr,
                                   std::uint64_t cap = std::uint64_t{1} << 31);

/// One guess at an FVS with at most k members (forced vertices count toward
/// k).  Alternates the size-preserving reduction with a degree-proportional
/// pick; weights are ignored.  nullopt = this trial found no FVS of size <= k.
std::optional<FvsResult> single_guess(const MultiGraph& g, std::uint32_t k, RandomStream rng);

/// Sweeps k = 1..|V| running ceil(c * 4^k) single_guess trials per k and
/// returns the first success.  Always terminates; with probability at least
/// 1 - (1 - 4^-k*)^(c 4^k*) the result is a minimum-size FVS (k* = minimum
/// FVS size).  Requires c >= 1.
FvsResult repeated_guess(const MultiGraph& g, double c, RandomStream rng);

/// Weighted single guess: weight-preserving reduction plus degree-proportional
/// picks, at most k members.  Members never have infinite weight.
std::optional<FvsResult> single_wguess_i(const MultiGraph& g, std::uint32_t k, RandomStream rng);

/// Weighted guess without a size bound, picking by degree-over-weight until
/// the graph is consumed.  Expected output weight is at most 6x the minimum.
FvsResult single_wguess_ii(const MultiGraph& g, RandomStream rng);

/// Runs exactly ceil(c * 6^k) single_wguess_i trials and returns the lightest
/// success (ties: earliest trial).  nullopt = no FVS of size <= k was found,
/// i.e. the minimum-weight FVS likely has more than k members.  c >= 1.
std::optional<FvsResult> repeated_wguess_i(const MultiGraph& g, double c, std::uint32_t k,
                                           RandomStream rng);

/// Anytime solver: keeps the lightest FVS seen across single_wguess_i(g, |V|)
/// runs, budgeting min(max_iters, c * 6^w(incumbent)) iterations, recomputed
/// whenever the incumbent improves (replacement on <=).  The trace records
/// every adopted incumbent weight; the sequence never increases.
FvsResult wra(const MultiGraph& g, double c, std::uint64_t max_iters, RandomStream rng);

}  // namespace loopcut
