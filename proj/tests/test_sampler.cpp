#include <doctest.h>

#include <map>

#include "cgg/errors.hpp"
#include "cgg/sampler.hpp"
#include "support.hpp"

using namespace cgg;
using testing::make_graph;

namespace {

Constraints trap_constraints() { return testing::trap_constraints(); }

}  // namespace

TEST_CASE("constraints validation") {
    Constraints c = trap_constraints();
    CHECK_NOTHROW(c.validate());
    c.cc_min = 0.95;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = trap_constraints();
    c.diam_max = 5;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = trap_constraints();
    c.m = 10;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("trap fixture: the clique-relocating move is rejected on cc") {
    const Constraints c = trap_constraints();
    ChainState state = validate_seed(testing::trap_fixture(), c);
    CHECK(state.cc() == doctest::Approx(0.8));

    const Swap move{Edge(1, 2), Edge(0, 1)};
    const double cc_after = clustering_coefficient(preview_swap(state.graph, state.ledger, move));
    CHECK(cc_after == doctest::Approx(9.0 / 14.0).epsilon(1e-15));
    CHECK(cc_after == doctest::Approx(0.64).epsilon(0.01));

    const ChainState before = state;
    Rng rng(1);
    CHECK(mh_step_with_proposal(state, c, move, rng) == StepOutcome::rejected_cc);
    CHECK(state.graph == before.graph);
    CHECK(state.ledger == before.ledger);
    // a valid state with a rejected move: the chain can stay put
    CHECK(state.rejected_cc == 1);
}

TEST_CASE("trap fixture: swaps reach only a fraction of the valid graphs") {
    const Constraints c = trap_constraints();
    const auto valid = testing::enumerate_valid(c);
    const auto reach = testing::reachable(testing::trap_fixture(), c);
    CHECK(valid.size() == 20);
    CHECK(reach.size() == 4);
    for (const auto& r : reach) CHECK(valid.count(r) == 1);
}

TEST_CASE("validate_seed lists every failed constraint") {
    Constraints c;
    c.n = 6;
    c.m = 5;
    c.cc_min = 0.5;
    c.cc_max = 1.0;
    c.diam_min = 1;
    c.diam_max = 2;
    // path of four edges plus an isolated node: wrong m, cc 0, disconnected
    const Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    try {
        validate_seed(g, c);
        FAIL("expected SeedViolation");
    } catch (const SeedViolation& e) {
        CHECK(e.reasons().size() == 3);
    }

    const Graph path = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    c.cc_min = 0.0;
    try {
        validate_seed(path, c);
        FAIL("expected SeedViolation");
    } catch (const SeedViolation& e) {
        REQUIRE(e.reasons().size() == 1);
        CHECK(e.reasons()[0].find("diameter") != std::string::npos);
    }
}

TEST_CASE("a diameter rejection restores graph and ledger exactly") {
    // star: removing a spoke and adding a leaf-leaf edge gives diameter 3
    Constraints c;
    c.n = 5;
    c.m = 4;
    c.cc_min = 0.0;
    c.cc_max = 1.0;
    c.diam_min = 1;
    c.diam_max = 2;
    ChainState state = validate_seed(make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), c);
    const ChainState before = state;
    Rng rng(3);
    CHECK(mh_step_with_proposal(state, c, Swap{Edge(0, 4), Edge(3, 4)}, rng) == StepOutcome::rejected_diameter);
    CHECK(state.graph == before.graph);
    CHECK(state.graph.edges() == before.graph.edges());
    CHECK(state.ledger == before.ledger);
    CHECK(state.rejected_diam == 1);
}

TEST_CASE("proposal is uniform over (edge, non-edge) pairs") {
    // P(G -> G') = 1 / (m (C(n,2) - m)) for every G' one swap away, the same
    // from G' back to G; check the frequencies on a small graph
    const Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const std::size_t cells = 4 * 6;
    std::map<std::pair<Edge, Edge>, int> hits;
    Rng rng(17);
    const int draws = 120000;
    for (int i = 0; i < draws; ++i) {
        const Swap s = propose_swap(g, rng);
        REQUIRE(g.has_edge(s.remove.u, s.remove.v));
        REQUIRE_FALSE(g.has_edge(s.insert.u, s.insert.v));
        ++hits[{s.remove, s.insert}];
    }
    REQUIRE(hits.size() == cells);
    const double expect = static_cast<double>(draws) / cells;
    double chi = 0.0;
    for (auto& [k, v] : hits) chi += (v - expect) * (v - expect) / expect;
    CHECK(chi < 49.7);  // 23 dof, p = 0.001

    // the reverse move has the same count of alternatives
    for (auto& [k, v] : hits) {
        Graph h = g;
        h.replace_edge(k.first, k.second);
        CHECK(h.num_edges() * (h.max_edges() - h.num_edges()) == cells);
    }
}

TEST_CASE("chain visits every connected 5-node 5-edge graph about equally") {
    // no cc restriction and diam_max = n-1: the valid set is all connected
    // graphs, the chain is ergodic and the target is uniform
    Constraints c;
    c.n = 5;
    c.m = 5;
    c.cc_min = 0.0;
    c.cc_max = 1.0;
    c.diam_min = 1;
    c.diam_max = 4;
    ChainState state = validate_seed(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), c);
    Rng rng(99);
    std::map<std::vector<Edge>, int> visits;
    const int steps = 600000;
    for (int t = 0; t < steps; ++t) {
        mh_step(state, c, rng);
        ++visits[state.graph.canonical_edges()];
    }
    const std::size_t expected_states = 222;  // connected labelled graphs with n=5, m=5
    REQUIRE(visits.size() == expected_states);
    const double mean = static_cast<double>(steps) / expected_states;
    for (auto& [k, v] : visits) {
        CHECK(v > 0.75 * mean);
        CHECK(v < 1.25 * mean);
    }
}

TEST_CASE("run_chain snapshot schedule") {
    Rng seed_rng(1);
    Constraints c;
    c.n = 12;
    c.m = 20;
    c.cc_min = 0.0;
    c.cc_max = 1.0;
    c.diam_min = 1;
    c.diam_max = 11;
    const Graph seed = testing::random_connected(12, 20, seed_rng);

    ChainOptions o;
    o.steps = 0;
    Rng rng(2);
    auto run = run_chain(seed, c, o, rng);
    REQUIRE(run.samples.size() == 1);
    CHECK(run.samples[0].step == 0);
    CHECK(run.samples[0].graph == seed);

    o.steps = 25;
    o.burn_in = 5;
    o.thinning = 10;
    run = run_chain(seed, c, o, rng);
    REQUIRE(run.samples.size() == 3);
    CHECK(run.samples[0].step == 5);
    CHECK(run.samples[1].step == 15);
    CHECK(run.samples[2].step == 25);
    CHECK(run.stats.accepted + run.stats.rejected_cc + run.stats.rejected_diam == 25);

    o.thinning = 0;
    CHECK_THROWS_AS(run_chain(seed, c, o, rng), ConfigError);
    o.thinning = 1;
    o.burn_in = 30;
    CHECK_THROWS_AS(run_chain(seed, c, o, rng), ConfigError);
}

TEST_CASE("default chain options") {
    const ChainOptions o = ChainOptions::defaults_for(156, 50);
    CHECK(o.burn_in == 1560);
    CHECK(o.thinning == 156);
    CHECK(o.steps == 1560 + 49 * 156);
}

TEST_CASE("every emitted sample satisfies the cc bounds exactly") {
    Rng rng(6);
    Constraints c;
    c.n = 20;
    c.m = 45;
    c.diam_min = 2;
    c.diam_max = 8;
    Graph seed;
    // find a seed by rejection from random connected graphs
    for (;;) {
        seed = testing::random_connected(20, 45, rng);
        const double cc = testing::brute_cc(seed);
        const auto d = testing::fw_diameter(seed);
        if (d >= 2 && d <= 8) {
            c.cc_min = std::max(0.0, cc - 0.05);
            c.cc_max = cc + 0.05;
            break;
        }
    }
    ChainOptions o;
    o.steps = 5000;
    o.burn_in = 0;
    o.thinning = 50;
    o.exact_diameter_audit = true;
    const auto run = run_chain(seed, c, o, rng);
    for (const auto& s : run.samples) {
        REQUIRE(c.cc_ok(testing::brute_cc(s.graph)));
        REQUIRE(s.cc == doctest::Approx(testing::brute_cc(s.graph)).epsilon(1e-12));
        REQUIRE(s.graph.num_edges() == c.m);
        REQUIRE(s.exact_diameter.has_value());
        REQUIRE(s.d_hat <= *s.exact_diameter);
    }
}
