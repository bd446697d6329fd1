#include <loopcut/bench.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <loopcut/io.hpp>
#include <loopcut/oracle.hpp>
#include <loopcut/random_fvs.hpp>

namespace loopcut {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

// FNV-1a; keys a cell's substream to the instance id so results do not depend
// on corpus ordering.
std::uint64_t hash_id(const std::string& id) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : id) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string join_members(const std::vector<VertexId>& members) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) {
            out.push_back(';');
        }
        out += std::to_string(members[i]);
    }
    return out;
}

void fill_from_fvs(BenchRow& row, const FvsResult& fvs) {
    row.weight = fvs.total_weight;
    row.size = fvs.members.size();
    row.iterations = fvs.trace.trials_run;
    row.members = fvs.members;
}

void run_graph_cell(BenchRow& row, const MultiGraph& g, BenchAlgo algo, const BenchBudget& budget,
                    const RandomStream& cell) {
    RandomStream rng = cell;
    switch (algo) {
        case BenchAlgo::Wra:
            fill_from_fvs(row, wra(g, budget.c, budget.max_iters, rng));
            break;
        case BenchAlgo::Ga:
            fill_from_fvs(row, greedy_ga(g));
            break;
        case BenchAlgo::Oracle:
            fill_from_fvs(row, brute_force_min_wfvs(g, budget.oracle_cap));
            break;
        case BenchAlgo::RepeatedGuess:
            fill_from_fvs(row, repeated_guess(g, budget.c, rng));
            break;
        case BenchAlgo::RWGuessI:
            fill_from_fvs(row, rwguess_sweep(g, budget.c, rng));
            break;
    }
}

void run_dag_cell(BenchRow& row, const Dag& d, BenchAlgo algo, const BenchBudget& budget,
                  const RandomStream& cell) {
    RandomStream rng = cell;
    switch (algo) {
        case BenchAlgo::Wra: {
            LoopCutsetResult r = rlc(d, budget.c, budget.max_iters, rng);
            row.weight = r.log2_weight == 0.0 ? Weight::zero() : Weight::finite(r.log2_weight);
            row.size = r.cutset.size();
            row.iterations = r.trace.trials_run;
            row.members = r.cutset;
            break;
        }
        case BenchAlgo::Ga: {
            SplitGraph split = split_graph(d);
            FvsResult fvs = greedy_ga(split.graph);
            std::vector<VertexId> cutset = psi(fvs.members, split);
            row.weight = fvs.total_weight;
            row.size = cutset.size();
            row.iterations = 1;
            row.members = std::move(cutset);
            break;
        }
        case BenchAlgo::Oracle: {
            LoopCutsetOracle r = brute_force_min_loop_cutset(d, budget.oracle_cap);
            row.weight = r.log2_weight == 0.0 ? Weight::zero() : Weight::finite(r.log2_weight);
            row.size = r.cutset.size();
            row.iterations = 1;
            row.members = r.cutset;
            break;
        }
        case BenchAlgo::RepeatedGuess:
        case BenchAlgo::RWGuessI:
            throw std::invalid_argument("algorithm '" + bench_algo_name(algo) +
                                        "' is not supported on dag corpora");
    }
}

template <typename Instance, typename RunCell>
BenchResult run_bench(const std::vector<std::pair<std::string, Instance>>& instances,
                      const std::vector<BenchAlgo>& algos, const BenchBudget& budget,
                      std::uint64_t seed, std::size_t (*vertex_count)(const Instance&),
                      std::size_t (*edge_count)(const Instance&), RunCell run_cell) {
    for (BenchAlgo algo : algos) {
        if constexpr (std::is_same_v<Instance, Dag>) {
            if (algo == BenchAlgo::RepeatedGuess || algo == BenchAlgo::RWGuessI) {
                throw std::invalid_argument("algorithm '" + bench_algo_name(algo) +
                                            "' is not supported on dag corpora");
            }
        }
    }
    RandomStream root(seed);
    BenchResult result;
    result.rows.reserve(instances.size() * algos.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& [id, instance] = instances[i];
        for (std::size_t j = 0; j < algos.size(); ++j) {
            BenchRow row;
            row.instance_id = id;
            row.n = vertex_count(instance);
            row.m = edge_count(instance);
            row.algo = bench_algo_name(algos[j]);
            row.seed = seed;
            const RandomStream cell = root.substream(hash_id(id)).substream(j);
            const auto start = Clock::now();
            try {
                run_cell(row, instance, algos[j], budget, cell);
            } catch (const oracle_cap_error& e) {
                row.ok = false;
                row.error = e.what();
            }
            if (budget.timing) {
                row.elapsed_ms = elapsed_ms_since(start);
            }
            result.rows.push_back(std::move(row));
        }
    }

    BenchSummary& summary = result.summary;
    summary.instance_count = instances.size();
    std::map<std::string, std::pair<double, std::size_t>> sums;
    for (const BenchRow& row : result.rows) {
        if (row.ok) {
            auto& [total, count] = sums[row.algo];
            total += row.weight.as_double();
            ++count;
        }
    }
    for (const auto& [algo, tally] : sums) {
        if (tally.second > 0) {
            summary.mean_weight[algo] = tally.first / static_cast<double>(tally.second);
        }
    }
    for (std::size_t a = 0; a < algos.size(); ++a) {
        for (std::size_t b = a + 1; b < algos.size(); ++b) {
            PairTally tally;
            tally.first = bench_algo_name(algos[a]);
            tally.second = bench_algo_name(algos[b]);
            for (std::size_t i = 0; i < instances.size(); ++i) {
                const BenchRow& ra = result.rows[i * algos.size() + a];
                const BenchRow& rb = result.rows[i * algos.size() + b];
                if (!ra.ok || !rb.ok) {
                    continue;
                }
                const double diff = ra.weight.as_double() - rb.weight.as_double();
                if (std::abs(diff) <= 1e-9) {
                    ++tally.ties;
                } else if (diff < 0.0) {
                    ++tally.first_wins;
                } else {
                    ++tally.second_wins;
                }
            }
            summary.pairs.push_back(std::move(tally));
        }
    }
    // Pair tallies index rows positionally, so the sort has to come last.
    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const BenchRow& a, const BenchRow& b) {
                         return a.instance_id < b.instance_id;
                     });
    return result;
}

std::size_t graph_vertex_count(const MultiGraph& g) { return g.vertex_count(); }
std::size_t graph_edge_count(const MultiGraph& g) { return g.edge_count(); }
std::size_t dag_vertex_count(const Dag& d) { return d.vertex_count(); }
std::size_t dag_edge_count(const Dag& d) { return d.arc_count(); }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (ch != '\r') {
            current.push_back(ch);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

constexpr const char* kCsvHeader = "instance_id,n,m,algo,seed,weight,size,iterations,elapsed_ms,members";

}  // namespace

FvsResult rwguess_sweep(const MultiGraph& g, double c, const RandomStream& rng) {
    const std::size_t n = std::max<std::size_t>(1, g.vertex_count());
    std::uint64_t total_trials = 0;
    for (std::uint32_t k = 1; k <= n; ++k) {
        RandomStream level = rng.substream(k);
        auto result = repeated_wguess_i(g, c, k, level);
        if (result) {
            result->trace.trials_run += total_trials;
            result->trace.k_reached = k;
            return std::move(*result);
        }
        bool saturated = false;
        total_trials += amplification_trials(c, k, 6.0, &saturated);
    }
    throw std::logic_error("rwguess sweep exhausted every k");  // k = |V| always succeeds
}

BenchAlgo parse_bench_algo(const std::string& name) {
    if (name == "wra") return BenchAlgo::Wra;
    if (name == "ga") return BenchAlgo::Ga;
    if (name == "oracle") return BenchAlgo::Oracle;
    if (name == "repeat") return BenchAlgo::RepeatedGuess;
    if (name == "rwguess1") return BenchAlgo::RWGuessI;
    throw std::invalid_argument("unknown bench algorithm: " + name);
}

std::string bench_algo_name(BenchAlgo algo) {
    switch (algo) {
        case BenchAlgo::Wra: return "wra";
        case BenchAlgo::Ga: return "ga";
        case BenchAlgo::Oracle: return "oracle";
        case BenchAlgo::RepeatedGuess: return "repeat";
        case BenchAlgo::RWGuessI: return "rwguess1";
    }
    throw std::logic_error("unhandled bench algorithm");
}

BenchResult run_bench_graphs(const std::vector<std::pair<std::string, MultiGraph>>& instances,
                             const std::vector<BenchAlgo>& algos, const BenchBudget& budget,
                             std::uint64_t seed) {
    return run_bench(instances, algos, budget, seed, graph_vertex_count, graph_edge_count,
                     run_graph_cell);
}

BenchResult run_bench_dags(const std::vector<std::pair<std::string, Dag>>& instances,
                           const std::vector<BenchAlgo>& algos, const BenchBudget& budget,
                           std::uint64_t seed) {
    return run_bench(instances, algos, budget, seed, dag_vertex_count, dag_edge_count,
                     run_dag_cell);
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kCsvHeader << "\n";
    for (const BenchRow& row : rows) {
        out << row.instance_id << "," << row.n << "," << row.m << "," << row.algo << ","
            << row.seed << ",";
        if (row.ok) {
            out << format_weight(row.weight) << "," << row.size << "," << row.iterations << ","
                << row.elapsed_ms << "," << join_members(row.members);
        } else {
            out << "NA,NA," << row.iterations << "," << row.elapsed_ms << ",NA";
        }
        out << "\n";
    }
}

std::vector<BenchRow> read_bench_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw parse_error("empty csv", 1);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw parse_error("unexpected csv header: " + line, 1);
    }
    std::vector<BenchRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 10) {
            throw parse_error("expected 10 csv fields, found " + std::to_string(fields.size()),
                              line_no);
        }
        BenchRow row;
        try {
            row.instance_id = fields[0];
            row.n = std::stoull(fields[1]);
            row.m = std::stoull(fields[2]);
            row.algo = fields[3];
            row.seed = std::stoull(fields[4]);
            if (fields[5] == "NA") {
                row.ok = false;
                row.error = "NA";
            } else if (fields[5] == "inf") {
                row.weight = Weight::infinite();
            } else {
                const double w = std::stod(fields[5]);
                row.weight = w == 0.0 ? Weight::zero() : Weight::finite(w);
            }
            if (row.ok) {
                row.size = std::stoull(fields[6]);
            }
            row.iterations = std::stoull(fields[7]);
            row.elapsed_ms = std::stoull(fields[8]);
            if (row.ok && !fields[9].empty()) {
                std::stringstream members(fields[9]);
                std::string token;
                while (std::getline(members, token, ';')) {
                    row.members.push_back(static_cast<VertexId>(std::stoul(token)));
                }
            }
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("malformed csv row", line_no);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_bench_summary(std::ostream& out, const BenchSummary& summary) {
    out << "instances: " << summary.instance_count << "\n";
    for (const auto& [algo, mean] : summary.mean_weight) {
        out << "mean_weight " << algo << ": " << format_double(mean) << "\n";
    }
    for (const PairTally& tally : summary.pairs) {
        out << "pair " << tally.first << " vs " << tally.second << ": wins=" << tally.first_wins
            << " ties=" << tally.ties << " losses=" << tally.second_wins << "\n";
    }
}

RateEstimate estimate_success_rate(const MultiGraph& g, const RateParams& params,
                                   std::uint64_t trials, RandomStream rng) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    const FvsResult oracle = brute_force_min_wfvs(g, params.oracle_cap);
    const double target = oracle.total_weight.as_double();
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomStream sub = rng.substream(t);
        double weight = -1.0;
        bool produced = false;
        switch (params.algo) {
            case RateAlgo::Guess: {
                auto r = single_guess(g, params.k, sub);
                if (r) {
                    produced = true;
                    weight = r->total_weight.as_double();
                }
                break;
            }
            case RateAlgo::WGuessI: {
                auto r = single_wguess_i(g, params.k, sub);
                if (r) {
                    produced = true;
                    weight = r->total_weight.as_double();
                }
                break;
            }
            case RateAlgo::WGuessII: {
                weight = single_wguess_ii(g, sub).total_weight.as_double();
                produced = true;
                break;
            }
            case RateAlgo::Repeat: {
                weight = repeated_guess(g, params.c, sub).total_weight.as_double();
                produced = true;
                break;
            }
            case RateAlgo::RWGuessI: {
                auto r = repeated_wguess_i(g, params.c, params.k, sub);
                if (r) {
                    produced = true;
                    weight = r->total_weight.as_double();
                }
                break;
            }
            case RateAlgo::Wra: {
                weight = wra(g, params.c, params.max_iters, sub).total_weight.as_double();
                produced = true;
                break;
            }
        }
        if (produced && std::abs(weight - target) <= 1e-9) {
            ++hits;
        }
    }
    RateEstimate estimate;
    estimate.trials = trials;
    estimate.oracle_weight = target;
    estimate.hit_rate = static_cast<double>(hits) / static_cast<double>(trials);
    const double half =
        1.96 * std::sqrt(estimate.hit_rate * (1.0 - estimate.hit_rate) /
                         static_cast<double>(trials));
    estimate.ci_lo = std::max(0.0, estimate.hit_rate - half);
    estimate.ci_hi = std::min(1.0, estimate.hit_rate + half);
    return estimate;
}

}  // namespace loopcut
