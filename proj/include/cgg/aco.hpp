#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cgg/diameter.hpp"
#include "cgg/graph.hpp"
#include "cgg/random.hpp"
#include "cgg/sampler.hpp"

namespace cgg {

// Nodes split into diam_min + 1 layers (0-based here).
struct LayerAssignment {
    std::vector<std::uint32_t> layer_of;
    std::vector<std::size_t> layer_sizes;

    std::size_t num_layers() const noexcept { return layer_sizes.size(); }
};

// Random permutation of the nodes cut into diam_min + 1 contiguous blocks whose
// sizes differ by at most one. Throws TooFewNodes if n < diam_min + 1.
LayerAssignment build_layers(std::size_t n, std::uint32_t diam_min, Rng& rng);

struct AvailableEdge {
    Edge edge;
    bool intra = false;  // both ends in the same layer
};

// All pairs with |layer(u) - layer(v)| <= 1, in increasing (u, v) order.
std::vector<AvailableEdge> available_edge_universe(const LayerAssignment& layers);

// Σ C(|L_i|, 2) + Σ |L_i||L_{i+1}| for the given layer sizes.
std::uint64_t available_edge_count(std::span<const std::size_t> layer_sizes);

// Layer sizes build_layers() produces for (n, diam_min), without the shuffle.
std::vector<std::size_t> balanced_layer_sizes(std::size_t n, std::uint32_t diam_min);

struct AcoParams {
    std::size_t ants = 40;
    std::size_t iterations = 60;
    double rho = 0.1;               // evaporation rate
    double boost = 2.0;             // B
    double hinder = 0.5;            // H
    double reward_valid = 1.0;      // numerator when D̂ <= diam_max
    double reward_invalid = 0.1;    // numerator otherwise
    double epsilon = 1e-3;
    double elite_fraction = 0.1;
    double tau_initial = 1.0;
    double tau_floor = 1e-4;

    // Throws ConfigError.
    void validate() const;
};

// Pheromone weight per available edge, indexed like the universe.
class PheromoneMap {
public:
    PheromoneMap(const LayerAssignment& layers, double tau_initial, double tau_floor);

    std::size_t size() const noexcept { return universe_.size(); }
    std::size_t num_nodes() const noexcept { return num_nodes_; }
    const std::vector<AvailableEdge>& universe() const noexcept { return universe_; }
    std::span<const double> tau() const noexcept { return tau_; }
    double tau_at(std::size_t i) const { return tau_[i]; }
    void set_tau(std::size_t i, double value);
    double floor() const noexcept { return floor_; }

    // Position of `e` in the universe, or nothing if the pair is not available.
    std::optional<std::size_t> index_of(Edge e) const;

private:
    std::size_t num_nodes_ = 0;
    std::vector<AvailableEdge> universe_;
    std::vector<double> tau_;
    std::vector<std::int32_t> index_;  // dense n*n lookup, -1 when unavailable
    double floor_ = 0.0;
};

// Draws m distinct available edges; each draw picks an edge not yet chosen with
// probability proportional to its pheromone. Throws InfeasibleEdgeCount.
Graph construct_ant_graph(const PheromoneMap& pher, std::size_t m, Rng& rng);

struct AntSolution {
    Graph graph;
    double reward = 0.0;
    double cc = 0.0;
    DiameterEstimate d_hat;
    bool valid = false;
};

// R = numerator / (epsilon + |C* - cc|), numerator = reward_valid when the
// graph is connected with D̂ <= diam_max, else reward_invalid.
AntSolution score_reward(Graph g, const AcoParams& params, const Constraints& c, Rng& rng);

// C* = (cc_min + cc_max) / 2.
inline double target_cc(const Constraints& c) noexcept { return 0.5 * (c.cc_min + c.cc_max); }

// Evaporates every available edge, then lets the top ceil(elite_fraction * k)
// solutions of `ranked` (sorted by reward, descending) deposit R_a * W on each
// of their edges, and clamps at the floor. W favours intra-layer edges for an
// elite below C* and inter-layer edges for one above it.
void update_pheromones(PheromoneMap& pher, std::span<const AntSolution> ranked, const AcoParams& params,
                       double c_star);

// W for one edge of an elite graph with clustering `cc`; 1 when cc == C*.
double deposit_weight(double cc, double c_star, bool intra, const AcoParams& params) noexcept;

struct AcoResult {
    std::vector<AntSolution> solutions;  // exactly verified, distinct edge sets
    LayerAssignment layers;
    std::size_t iterations_run = 0;
};

// Layered ant colony search. Stops after params.iterations or as soon as
// target_count distinct valid graphs are found. Every returned graph passed
// the exact diameter check. Throws TooFewNodes or InfeasibleEdgeCount.
AcoResult run_aco(const Constraints& c, const AcoParams& params, std::size_t target_count, Rng& rng);

}  // namespace cgg
