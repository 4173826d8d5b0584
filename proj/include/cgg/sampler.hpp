#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cgg/diameter.hpp"
#include "cgg/graph.hpp"
#include "cgg/random.hpp"

namespace cgg {

// Target region: fixed n and m, cc in [cc_min, cc_max], diam in [diam_min, diam_max].
struct Constraints {
    std::size_t n = 0;
    std::size_t m = 0;
    double cc_min = 0.0;
    double cc_max = 1.0;
    std::uint32_t diam_min = 1;
    std::uint32_t diam_max = 1;

    // Throws ConfigError when the bounds are inconsistent.
    void validate() const;
    bool cc_ok(double cc) const noexcept { return cc >= cc_min && cc <= cc_max; }
    bool diam_ok(std::uint32_t d) const noexcept { return d >= diam_min && d <= diam_max; }
};

struct ChainState {
    Graph graph;
    TriangleLedger ledger;
    std::uint32_t d_hat = 0;  // last diameter check: exact for the seed, double sweep after
    std::uint64_t step = 0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected_cc = 0;
    std::uint64_t rejected_diam = 0;

    double cc() const noexcept { return clustering_coefficient(ledger); }
};

enum class StepOutcome { accepted, rejected_cc, rejected_diameter };

// Uniform (edge, non-edge) proposal. The proposal probability is
// 1 / (m * (C(n,2) - m)) from every graph with m edges, so it is symmetric.
Swap propose_swap(const Graph& g, Rng& rng);

// One Metropolis-Hastings step with the binary acceptance rule: the cc bound
// is checked exactly from the incremental ledger before touching the graph;
// the diameter bound is checked on the double-sweep estimate of the swapped
// graph, and the swap is undone if it fails. A rejected step leaves graph and
// ledger unchanged.
StepOutcome mh_step(ChainState& state, const Constraints& c, Rng& rng);

// Same, with the proposal supplied. `rng` drives only the double sweep.
StepOutcome mh_step_with_proposal(ChainState& state, const Constraints& c, const Swap& s, Rng& rng);

// Builds the initial chain state. Uses the exact diameter; throws
// SeedViolation naming every failed constraint.
ChainState validate_seed(const Graph& g, const Constraints& c);

struct ChainOptions {
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t thinning = 1;
    // Re-check each emitted snapshot with the all-pairs diameter.
    bool exact_diameter_audit = false;

    // burn_in = 10m, thinning = m, and just enough steps for `samples` snapshots.
    static ChainOptions defaults_for(std::size_t m, std::size_t samples);
};

struct ChainSample {
    Graph graph;
    std::uint64_t step = 0;
    double cc = 0.0;
    std::uint32_t d_hat = 0;
    std::optional<std::uint32_t> exact_diameter;
};

struct ChainStats {
    std::uint64_t accepted = 0;
    std::uint64_t rejected_cc = 0;
    std::uint64_t rejected_diam = 0;
};

struct ChainRun {
    std::vector<ChainSample> samples;
    ChainStats stats;
};

// Runs `steps` MH steps from `seed`. A snapshot is taken at every step t with
// t >= burn_in and (t - burn_in) % thinning == 0, where t = 0 is the seed.
ChainRun run_chain(const Graph& seed, const Constraints& c, const ChainOptions& opts, Rng& rng);

}  // namespace cgg
