#include "cgg/sampler.hpp"

#include <algorithm>
#include <string>

#include "cgg/errors.hpp"

namespace cgg {

void Constraints::validate() const {
    if (n < 2) throw ConfigError("constraints: n must be at least 2");
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m == 0 || m >= pairs)
        throw ConfigError("constraints: need 0 < m < C(n,2), got m=" + std::to_string(m));
    if (!(cc_min >= 0.0 && cc_max <= 1.0 && cc_min <= cc_max))
        throw ConfigError("constraints: need 0 <= cc_min <= cc_max <= 1");
    if (diam_min < 1 || diam_min > diam_max || diam_max > n - 1)
        throw ConfigError("constraints: need 1 <= diam_min <= diam_max <= n-1");
}

Swap propose_swap(const Graph& g, Rng& rng) {
    const Edge remove = sample_random_edge(g, rng);
    const Edge insert = sample_random_non_edge(g, rng);
    return {remove, insert};
}

StepOutcome mh_step_with_proposal(ChainState& state, const Constraints& c, const Swap& s, Rng& rng) {
    ++state.step;
    const TriangleLedger next = preview_swap(state.graph, state.ledger, s);
    if (!c.cc_ok(clustering_coefficient(next))) {
        ++state.rejected_cc;
        return StepOutcome::rejected_cc;
    }

    apply_swap_with_ledger(state.graph, state.ledger, s);
    thread_local BfsWorkspace ws;
    const DiameterEstimate est = double_sweep_estimate(state.graph, rng, ws);
    if (!est.connected || !c.diam_ok(*est.lower)) {
        apply_swap_with_ledger(state.graph, state.ledger, s.inverse());
        ++state.rejected_diam;
        return StepOutcome::rejected_diameter;
    }
    state.d_hat = *est.lower;
    ++state.accepted;
    return StepOutcome::accepted;
}

StepOutcome mh_step(ChainState& state, const Constraints& c, Rng& rng) {
    const Swap s = propose_swap(state.graph, rng);
    return mh_step_with_proposal(state, c, s, rng);
}

ChainState validate_seed(const Graph& g, const Constraints& c) {
    std::vector<std::string> reasons;
    if (g.num_nodes() != c.n)
        reasons.push_back("node count " + std::to_string(g.num_nodes()) + " != " + std::to_string(c.n));
    if (g.num_edges() != c.m)
        reasons.push_back("edge count " + std::to_string(g.num_edges()) + " != " + std::to_string(c.m));

    ChainState state;
    state.ledger = recount_triangles_triplets(g);
    const double cc = clustering_coefficient(state.ledger);
    if (!c.cc_ok(cc))
        reasons.push_back("clustering coefficient " + std::to_string(cc) + " outside [" +
                          std::to_string(c.cc_min) + ", " + std::to_string(c.cc_max) + "]");

    const DiameterEstimate d = exact_diameter(g);
    if (!d.connected) {
        reasons.push_back("graph is disconnected");
    } else if (!c.diam_ok(*d.exact)) {
        reasons.push_back("diameter " + std::to_string(*d.exact) + " outside [" +
                          std::to_string(c.diam_min) + ", " + std::to_string(c.diam_max) + "]");
    }
    if (!reasons.empty()) throw SeedViolation(std::move(reasons));

    state.graph = g;
    state.d_hat = *d.exact;
    return state;
}

ChainOptions ChainOptions::defaults_for(std::size_t m, std::size_t samples) {
    ChainOptions o;
    o.burn_in = 10 * static_cast<std::uint64_t>(m);
    o.thinning = std::max<std::uint64_t>(1, m);
    o.steps = o.burn_in + (samples > 0 ? (samples - 1) * o.thinning : 0);
    return o;
}

ChainRun run_chain(const Graph& seed, const Constraints& c, const ChainOptions& opts, Rng& rng) {
    if (opts.thinning == 0) throw ConfigError("chain: thinning must be >= 1");
    if (opts.burn_in > opts.steps) throw ConfigError("chain: burn_in must not exceed steps");

    ChainState state = validate_seed(seed, c);
    ChainRun run;
    auto snapshot = [&](std::uint64_t t) {
        ChainSample s;
        s.graph = state.graph;
        s.step = t;
        s.cc = state.cc();
        s.d_hat = state.d_hat;
        if (opts.exact_diameter_audit) s.exact_diameter = exact_diameter(state.graph).value();
        run.samples.push_back(std::move(s));
    };

    for (std::uint64_t t = 0;; ++t) {
        if (t >= opts.burn_in && (t - opts.burn_in) % opts.thinning == 0) snapshot(t);
        if (t == opts.steps) break;
        mh_step(state, c, rng);
    }
    run.stats = {state.accepted, state.rejected_cc, state.rejected_diam};
    return run;
}

}  // namespace cgg
