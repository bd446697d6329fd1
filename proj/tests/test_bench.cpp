#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include <loopcut/bench.hpp>
#include <loopcut/io.hpp>
#include <loopcut/oracle.hpp>
#include <loopcut/rng.hpp>

#include "test_support.hpp"

using loopcut::BenchAlgo;
using loopcut::BenchBudget;
using loopcut::BenchResult;
using loopcut::BenchRow;
using loopcut::Dag;
using loopcut::MultiGraph;
using loopcut::RandomStream;
using loopcut::VertexId;

namespace {

std::vector<std::pair<std::string, MultiGraph>> small_graph_corpus() {
    return {
        {"a_path", testsupport::path(5)},
        {"b_cycle", testsupport::cycle(6)},
        {"c_trip", testsupport::tripled_p3(0.1, 10.0)},
        {"d_k4", testsupport::k4()},
    };
}

}  // namespace

TEST_CASE("bench algo names round-trip, unknown names rejected") {
    for (BenchAlgo algo : {BenchAlgo::Wra, BenchAlgo::Ga, BenchAlgo::Oracle,
                           BenchAlgo::RepeatedGuess, BenchAlgo::RWGuessI}) {
        CHECK(loopcut::parse_bench_algo(loopcut::bench_algo_name(algo)) == algo);
    }
    CHECK_THROWS_AS(loopcut::parse_bench_algo("mga"), std::invalid_argument);
}

TEST_CASE("run_bench_graphs: one row per cell, oracle lower-bounds the field") {
    const auto instances = small_graph_corpus();
    const std::vector<BenchAlgo> algos = {BenchAlgo::Wra, BenchAlgo::Ga, BenchAlgo::Oracle,
                                          BenchAlgo::RepeatedGuess, BenchAlgo::RWGuessI};
    BenchBudget budget;
    budget.max_iters = 40;
    const BenchResult result = loopcut::run_bench_graphs(instances, algos, budget, 5);
    REQUIRE(result.rows.size() == instances.size() * algos.size());
    CHECK(result.summary.instance_count == instances.size());

    std::map<std::string, double> oracle_weight;
    for (const BenchRow& row : result.rows) {
        REQUIRE(row.ok);
        if (row.algo == "oracle") {
            oracle_weight[row.instance_id] = row.weight.as_double();
        }
    }
    for (const BenchRow& row : result.rows) {
        CHECK(row.weight.as_double() >= oracle_weight.at(row.instance_id) - 1e-9);
        CHECK(row.size == row.members.size());
        if (row.instance_id == "a_path") {
            CHECK(row.weight.is_zero());
        }
    }
    // forests tie everywhere, so each pair tally partitions the corpus
    for (const auto& tally : result.summary.pairs) {
        CHECK(tally.first_wins + tally.ties + tally.second_wins == instances.size());
    }
    // rows come back sorted by instance then algo order
    for (std::size_t i = 0; i + 1 < result.rows.size(); ++i) {
        CHECK(result.rows[i].instance_id <= result.rows[i + 1].instance_id);
    }
}

TEST_CASE("run_bench: tallies and rows are corpus-order independent") {
    auto instances = small_graph_corpus();
    const std::vector<BenchAlgo> algos = {BenchAlgo::Wra, BenchAlgo::Ga};
    BenchBudget budget;
    budget.max_iters = 30;
    const BenchResult forward = loopcut::run_bench_graphs(instances, algos, budget, 9);
    std::reverse(instances.begin(), instances.end());
    const BenchResult reversed = loopcut::run_bench_graphs(instances, algos, budget, 9);
    REQUIRE(forward.rows.size() == reversed.rows.size());
    for (std::size_t i = 0; i < forward.rows.size(); ++i) {
        CHECK(forward.rows[i].instance_id == reversed.rows[i].instance_id);
        CHECK(forward.rows[i].algo == reversed.rows[i].algo);
        CHECK(forward.rows[i].weight.as_double() == reversed.rows[i].weight.as_double());
        CHECK(forward.rows[i].members == reversed.rows[i].members);
    }
    REQUIRE(forward.summary.pairs.size() == reversed.summary.pairs.size());
    for (std::size_t i = 0; i < forward.summary.pairs.size(); ++i) {
        CHECK(forward.summary.pairs[i].ties == reversed.summary.pairs[i].ties);
        CHECK(forward.summary.pairs[i].first_wins == reversed.summary.pairs[i].first_wins);
        CHECK(forward.summary.pairs[i].second_wins == reversed.summary.pairs[i].second_wins);
    }
}

TEST_CASE("run_bench_graphs: oversized oracle becomes a per-row error, run continues") {
    std::vector<std::pair<std::string, MultiGraph>> instances = {
        {"big", testsupport::random_graph(24, 30, 3)},
        {"small", testsupport::cycle(4)},
    };
    BenchBudget budget;
    budget.max_iters = 20;
    const BenchResult result =
        loopcut::run_bench_graphs(instances, {BenchAlgo::Oracle, BenchAlgo::Wra}, budget, 2);
    REQUIRE(result.rows.size() == 4);
    const BenchRow* big_oracle = nullptr;
    for (const BenchRow& row : result.rows) {
        if (row.instance_id == "big" && row.algo == "oracle") {
            big_oracle = &row;
        } else {
            CHECK(row.ok);
        }
    }
    REQUIRE(big_oracle != nullptr);
    CHECK_FALSE(big_oracle->ok);
    CHECK(big_oracle->error.find("too large") != std::string::npos);
    // failed rows do not poison the mean
    CHECK(result.summary.mean_weight.count("oracle") == 1);
    CHECK(result.summary.mean_weight.at("oracle") == doctest::Approx(1.0));
}

TEST_CASE("run_bench_dags: weight-blind algorithms are rejected") {
    std::vector<std::pair<std::string, Dag>> instances = {{"d", testsupport::diamond_dag()}};
    BenchBudget budget;
    CHECK_THROWS_AS(
        loopcut::run_bench_dags(instances, {BenchAlgo::RepeatedGuess}, budget, 1),
        std::invalid_argument);
    const BenchResult ok =
        loopcut::run_bench_dags(instances, {BenchAlgo::Wra, BenchAlgo::Ga, BenchAlgo::Oracle},
                                budget, 1);
    for (const BenchRow& row : ok.rows) {
        CHECK(row.ok);
        CHECK(row.weight.as_double() == doctest::Approx(1.0));
        CHECK(loopcut::verify_loop_cutset(testsupport::diamond_dag(), row.members));
    }
}

TEST_CASE("bench csv: writes the fixed header and round-trips") {
    const auto instances = small_graph_corpus();
    BenchBudget budget;
    budget.max_iters = 25;
    const BenchResult result = loopcut::run_bench_graphs(
        instances, {BenchAlgo::Wra, BenchAlgo::Oracle}, budget, 8);
    std::ostringstream out;
    loopcut::write_bench_csv(out, result.rows);
    const std::string text = out.str();
    CHECK(text.rfind("instance_id,n,m,algo,seed,weight,size,iterations,elapsed_ms,members\n",
                     0) == 0);

    std::istringstream in(text);
    const std::vector<BenchRow> parsed = loopcut::read_bench_csv(in);
    REQUIRE(parsed.size() == result.rows.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].instance_id == result.rows[i].instance_id);
        CHECK(parsed[i].n == result.rows[i].n);
        CHECK(parsed[i].m == result.rows[i].m);
        CHECK(parsed[i].algo == result.rows[i].algo);
        CHECK(parsed[i].seed == result.rows[i].seed);
        CHECK(parsed[i].weight.as_double() == result.rows[i].weight.as_double());
        CHECK(parsed[i].size == result.rows[i].size);
        CHECK(parsed[i].iterations == result.rows[i].iterations);
        CHECK(parsed[i].members == result.rows[i].members);
        // the recorded members re-verify against the instance
        for (const auto& [id, g] : instances) {
            if (id == parsed[i].instance_id) {
                CHECK(loopcut::verify_fvs(g, parsed[i].members));
            }
        }
    }

    std::istringstream bad("wrong,header\n");
    CHECK_THROWS_AS(loopcut::read_bench_csv(bad), loopcut::parse_error);
}

TEST_CASE("bench summary: text form is stable") {
    loopcut::BenchSummary summary;
    summary.instance_count = 2;
    summary.mean_weight["ga"] = 2.5;
    summary.mean_weight["wra"] = 2.0;
    summary.pairs.push_back({"wra", "ga", 1, 1, 0});
    std::ostringstream out;
    loopcut::write_bench_summary(out, summary);
    CHECK(out.str() ==
          "instances: 2\n"
          "mean_weight ga: 2.5\n"
          "mean_weight wra: 2\n"
          "pair wra vs ga: wins=1 ties=1 losses=0\n");
}

TEST_CASE("estimate_success_rate: exact on forests, binomial CI brackets the truth") {
    loopcut::RateParams params;
    params.algo = loopcut::RateAlgo::WGuessII;
    const auto forest =
        loopcut::estimate_success_rate(testsupport::path(4), params, 200, RandomStream(1));
    CHECK(forest.hit_rate == 1.0);
    CHECK(forest.ci_hi == 1.0);
    CHECK(forest.oracle_weight == 0.0);

    params.algo = loopcut::RateAlgo::WGuessI;
    params.k = 1;
    const auto trip = loopcut::estimate_success_rate(testsupport::tripled_p3(0.1, 10.0), params,
                                                     4000, RandomStream(3));
    CHECK(trip.oracle_weight == 6.0);
    CHECK(trip.ci_lo <= 0.5);
    CHECK(trip.ci_hi >= 0.5);
    CHECK(trip.trials == 4000);

    CHECK_THROWS_AS(loopcut::estimate_success_rate(testsupport::path(3), params, 0,
                                                   RandomStream(0)),
                    std::invalid_argument);
}

TEST_CASE("rwguess_sweep: arrives at the small instances' minima") {
    const loopcut::FvsResult r =
        loopcut::rwguess_sweep(testsupport::k4(), 1.0, RandomStream(17));
    CHECK(r.members.size() == 2);
    CHECK(r.trace.k_reached == 2);
    CHECK(r.trace.trials_run > 6);  // the failed k=1 level ran its 6 trials

    const loopcut::FvsResult f = loopcut::rwguess_sweep(testsupport::path(3), 1.0,
                                                        RandomStream(17));
    CHECK(f.members.empty());
    CHECK(f.trace.k_reached == 1);
}
