#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <loopcut/dag.hpp>
#include <loopcut/oracle.hpp>
#include <loopcut/rng.hpp>

#include "test_support.hpp"

using loopcut::Dag;
using loopcut::MultiGraph;
using loopcut::RandomStream;
using loopcut::SplitGraph;
using loopcut::VertexId;
using loopcut::Weight;

TEST_CASE("dag: validation") {
    Dag d;
    d.add_vertex(0, 2);
    d.add_vertex(1, 3);
    CHECK_THROWS_AS(d.add_vertex(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(d.add_vertex(2, 1), std::invalid_argument);  // domain >= 2
    d.add_arc(0, 1);
    CHECK_THROWS_AS(d.add_arc(0, 1), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(d.add_arc(0, 0), std::invalid_argument);  // self-arc
    CHECK_THROWS_AS(d.add_arc(0, 9), std::invalid_argument);  // unknown vertex
    CHECK(d.is_acyclic());

    d.add_arc(1, 0);  // creates a 2-cycle; only validate() sees it
    CHECK_FALSE(d.is_acyclic());
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("split_graph: two vertices per source vertex, bridge plus arc edges") {
    const Dag d = testsupport::diamond_dag();
    const SplitGraph s = loopcut::split_graph(d);
    CHECK(s.graph.vertex_count() == 8);
    // 4 bridges + 4 arc edges
    CHECK(s.graph.edge_count() == 8);
    for (VertexId v : d.vertex_ids()) {
        const VertexId in = SplitGraph::in_vertex(v);
        const VertexId out = SplitGraph::out_vertex(v);
        CHECK(in == 2 * v);
        CHECK(out == 2 * v + 1);
        CHECK(s.graph.weight(in).is_infinite());
        CHECK(s.graph.weight(out) == Weight::finite(1.0));  // log2(2)
        CHECK(s.graph.multiplicity(in, out) == 1);
        CHECK(s.origin.at(in).first == v);
        CHECK(s.origin.at(out).first == v);
    }
    // arc a->b becomes edge a_out - b_in
    CHECK(s.graph.multiplicity(SplitGraph::out_vertex(0), SplitGraph::in_vertex(1)) == 1);
    CHECK(s.graph.multiplicity(SplitGraph::out_vertex(2), SplitGraph::in_vertex(3)) == 1);
    CHECK(s.graph.multiplicity(SplitGraph::in_vertex(0), SplitGraph::in_vertex(1)) == 0);

    // domain sizes land as log2 weights on the out-vertex
    const Dag t = testsupport::triangle_dag(2, 4, 2);
    const SplitGraph ts = loopcut::split_graph(t);
    CHECK(ts.graph.weight(SplitGraph::out_vertex(1)) == Weight::finite(2.0));

    Dag big;
    big.add_vertex(2147483650u, 2);
    CHECK_THROWS_AS(loopcut::split_graph(big), std::invalid_argument);
}

TEST_CASE("psi: maps split vertices back and dedupes the pair") {
    const SplitGraph s = loopcut::split_graph(testsupport::diamond_dag());
    CHECK(loopcut::psi({}, s).empty());
    CHECK(loopcut::psi({SplitGraph::in_vertex(2)}, s) == std::vector<VertexId>{2});
    CHECK(loopcut::psi({SplitGraph::in_vertex(1), SplitGraph::out_vertex(1)}, s) ==
          std::vector<VertexId>{1});
    CHECK(loopcut::psi({SplitGraph::out_vertex(3), SplitGraph::in_vertex(0)}, s) ==
          std::vector<VertexId>{0, 3});
    CHECK_THROWS_AS(loopcut::psi({999}, s), std::invalid_argument);
}

TEST_CASE("verify_loop_cutset: allowed vertices cut, sinks do not") {
    const Dag d = testsupport::diamond_dag();
    CHECK_FALSE(loopcut::verify_loop_cutset(d, {}));
    CHECK(loopcut::verify_loop_cutset(d, {0}));
    CHECK(loopcut::verify_loop_cutset(d, {1}));
    CHECK(loopcut::verify_loop_cutset(d, {2}));
    // 3 is the loop's sink: both loop arcs point into it
    CHECK_FALSE(loopcut::verify_loop_cutset(d, {3}));
    CHECK(loopcut::verify_loop_cutset(d, {0, 3}));
    CHECK_THROWS_AS(loopcut::verify_loop_cutset(d, {9}), std::invalid_argument);

    CHECK(loopcut::verify_loop_cutset(testsupport::chain_dag(5), {}));
}

TEST_CASE("rlc: singly-connected inputs cost nothing") {
    const loopcut::LoopCutsetResult r =
        loopcut::rlc(testsupport::chain_dag(6), 1.0, 50, RandomStream(4));
    CHECK(r.cutset.empty());
    CHECK(r.log2_weight == 0.0);
}

TEST_CASE("rlc: known minima on the diamond and weighted triangle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const loopcut::LoopCutsetResult r =
            loopcut::rlc(testsupport::diamond_dag(), 1.0, 50, RandomStream(seed));
        CHECK(r.cutset.size() == 1);
        CHECK(r.cutset[0] <= 2);  // one of a, b, c; never the sink d
        CHECK(r.log2_weight == 1.0);
        CHECK(loopcut::verify_loop_cutset(testsupport::diamond_dag(), r.cutset));
    }
    // allowed vertices of the only loop are a (weight 1) and b (weight 2)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const loopcut::LoopCutsetResult r =
            loopcut::rlc(testsupport::triangle_dag(2, 4, 2), 1.0, 50, RandomStream(seed));
        CHECK(r.cutset == std::vector<VertexId>{0});
        CHECK(r.log2_weight == 1.0);
    }
}

TEST_CASE("rlc: outputs verify and dominate the oracle on random dags") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Dag d = testsupport::random_dag(7, 10, seed);
        const loopcut::LoopCutsetResult r = loopcut::rlc(d, 1.0, 30, RandomStream(seed));
        CHECK(loopcut::verify_loop_cutset(d, r.cutset));
        const loopcut::LoopCutsetOracle exact = loopcut::brute_force_min_loop_cutset(d);
        CHECK(r.log2_weight >= exact.log2_weight - 1e-9);
        for (std::size_t i = 1; i < r.trace.incumbent_weights.size(); ++i) {
            CHECK(r.trace.incumbent_weights[i] <= r.trace.incumbent_weights[i - 1]);
        }
    }
}

TEST_CASE("loop counting: chains have none, the diamond has one") {
    CHECK(testsupport::count_loops(testsupport::chain_dag(5)) == 0);
    CHECK(testsupport::count_loops(testsupport::diamond_dag()) == 1);
    CHECK(testsupport::count_loops(testsupport::triangle_dag()) == 1);
    CHECK(testsupport::count_simple_cycles(
              loopcut::split_graph(testsupport::diamond_dag()).graph) == 1);
}

TEST_CASE("split-graph cycles: count matches loops unless a pinch doubles back") {
    // v has in-degree 2 and out-degree 2; the split graph gains a cycle
    // through v_in and v_out on opposite branches that no loop produces.
    Dag pinched;
    for (VertexId v = 0; v < 5; ++v) {
        pinched.add_vertex(v, 2);
    }
    pinched.add_arc(1, 0);  // a -> v
    pinched.add_arc(2, 0);  // b -> v
    pinched.add_arc(0, 3);  // v -> c
    pinched.add_arc(0, 4);  // v -> d
    pinched.add_arc(1, 3);  // a -> c
    pinched.add_arc(2, 4);  // b -> d
    CHECK(pinched.is_acyclic());
    CHECK(testsupport::has_pinch(pinched));
    CHECK(testsupport::count_loops(pinched) == 2);
    CHECK(testsupport::count_simple_cycles(loopcut::split_graph(pinched).graph) == 3);

    // the reduction stays sound: cutsets verified through the split graph are
    // genuine loop cutsets even when the counts diverge
    const loopcut::LoopCutsetOracle exact = loopcut::brute_force_min_loop_cutset(pinched);
    CHECK(loopcut::verify_loop_cutset(pinched, exact.cutset));
    CHECK(exact.log2_weight == 1.0);  // {v} alone is allowed on both loops

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 3 + seed % 6;
        const Dag d = testsupport::random_dag(n, std::min(n * 3 / 2, n * (n - 1) / 2), seed);
        const std::size_t loops = testsupport::count_loops(d);
        const std::size_t cycles =
            testsupport::count_simple_cycles(loopcut::split_graph(d).graph);
        CHECK(loops <= cycles);
        if (!testsupport::has_pinch(d)) {
            CHECK(loops == cycles);
        }
    }
}
