#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <loopcut/dag.hpp>
#include <loopcut/multigraph.hpp>
#include <loopcut/rng.hpp>

namespace loopcut {

enum class BenchAlgo {
    Wra,            // "wra"
    Ga,             // "ga"
    Oracle,         // "oracle"
    RepeatedGuess,  // "repeat" (graph corpora only: it ignores weights)
    RWGuessI,       // "rwguess1": k = 1,2,... sweep until a size-k FVS appears
};

BenchAlgo parse_bench_algo(const std::string& name);
std::string bench_algo_name(BenchAlgo algo);

struct BenchBudget {
    double c = 1.0;
    std::uint64_t max_iters = 300;
    std::size_t oracle_cap = 20;
    bool timing = false;  // elapsed_ms stays 0 unless enabled (keeps output reproducible)
};

struct BenchRow {
    std::string instance_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string algo;
    std::uint64_t seed = 0;
    bool ok = true;
    std::string error;  // set when ok == false (e.g. oracle cap exceeded)
    Weight weight;
    std::size_t size = 0;
    std::uint64_t iterations = 0;
    std::uint64_t elapsed_ms = 0;
    std::vector<VertexId> members;  // the cutset / FVS the row reports
};

struct PairTally {
    std::string first;
    std::string second;
    std::size_t first_wins = 0;
    std::size_t ties = 0;
    std::size_t second_wins = 0;
};

struct BenchSummary {
    std::size_t instance_count = 0;
    std::map<std::string, double> mean_weight;  // over rows that succeeded
    std::vector<PairTally> pairs;               // every algo pair, given order
};

struct BenchResult {
    std::vector<BenchRow> rows;  // sorted by (instance_id, algo order)
    BenchSummary summary;
};

/// k = 1,2,... sweep of the amplified weighted guesser; stops at the first k
/// that yields a feedback vertex set, so it always returns.  trials_run in the
/// trace accumulates attempts across every level.
FvsResult rwguess_sweep(const MultiGraph& g, double c, const RandomStream& rng);

/// Runs every requested algorithm on every instance.  Rows are keyed by
/// instance_id, each (instance, algo) cell draws from its own substream, and
/// oracle rows over the cap become per-row errors instead of aborting.
BenchResult run_bench_graphs(const std::vector<std::pair<std::string, MultiGraph>>& instances,
                             const std::vector<BenchAlgo>& algos, const BenchBudget& budget,
                             std::uint64_t seed);
BenchResult run_bench_dags(const std::vector<std::pair<std::string, Dag>>& instances,
                           const std::vector<BenchAlgo>& algos, const BenchBudget& budget,
                           std::uint64_t seed);

/// CSV with the fixed header
/// instance_id,n,m,algo,seed,weight,size,iterations,elapsed_ms,members
/// (members are ';'-joined ids; error rows carry NA weight/size/members).
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
std::vector<BenchRow> read_bench_csv(std::istream& in);
void write_bench_summary(std::ostream& out, const BenchSummary& summary);

enum class RateAlgo { Guess, WGuessI, WGuessII, Repeat, RWGuessI, Wra };

struct RateParams {
    RateAlgo algo = RateAlgo::WGuessI;
    std::uint32_t k = 1;
    double c = 1.0;
    std::uint64_t max_iters = 300;
    std::size_t oracle_cap = 20;
};

struct RateEstimate {
    double hit_rate = 0.0;
    double ci_lo = 0.0;  // 95% normal-approximation interval
    double ci_hi = 0.0;
    std::uint64_t trials = 0;
    double oracle_weight = 0.0;
};

/// Fraction of independent trials whose output weight matches the exact
/// minimum (within 1e-9).  Trials that fail or return a verdict do not hit.
RateEstimate estimate_success_rate(const MultiGraph& g, const RateParams& params,
                                   std::uint64_t trials, RandomStream rng);

}  // namespace loopcut
