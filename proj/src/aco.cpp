#include "cgg/aco.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "cgg/errors.hpp"

namespace cgg {

std::vector<std::size_t> balanced_layer_sizes(std::size_t n, std::uint32_t diam_min) {
    const std::size_t k = static_cast<std::size_t>(diam_min) + 1;
    if (n < k)
        throw TooFewNodes("need at least diam_min+1=" + std::to_string(k) + " nodes, got " + std::to_string(n));
    std::vector<std::size_t> sizes(k, n / k);
    for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
    return sizes;
}

LayerAssignment build_layers(std::size_t n, std::uint32_t diam_min, Rng& rng) {
    LayerAssignment out;
    out.layer_sizes = balanced_layer_sizes(n, diam_min);
    std::vector<Node> perm(n);
    std::iota(perm.begin(), perm.end(), Node{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    out.layer_of.assign(n, 0);
    std::size_t pos = 0;
    for (std::size_t layer = 0; layer < out.layer_sizes.size(); ++layer)
        for (std::size_t j = 0; j < out.layer_sizes[layer]; ++j)
            out.layer_of[perm[pos++]] = static_cast<std::uint32_t>(layer);
    return out;
}

std::vector<AvailableEdge> available_edge_universe(const LayerAssignment& layers) {
    const std::size_t n = layers.layer_of.size();
    std::vector<AvailableEdge> out;
    for (Node u = 0; u < n; ++u) {
        for (Node v = u + 1; v < n; ++v) {
            const auto lu = layers.layer_of[u];
            const auto lv = layers.layer_of[v];
            const auto gap = lu > lv ? lu - lv : lv - lu;
            if (gap <= 1) out.push_back({Edge(u, v), gap == 0});
        }
    }
    return out;
}

std::uint64_t available_edge_count(std::span<const std::size_t> layer_sizes) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < layer_sizes.size(); ++i) {
        const std::uint64_t s = layer_sizes[i];
        total += s * (s - (s > 0 ? 1 : 0)) / 2;
        if (i + 1 < layer_sizes.size()) total += s * layer_sizes[i + 1];
    }
    return total;
}

void AcoParams::validate() const {
    if (ants == 0) throw ConfigError("aco: ants must be >= 1");
    if (iterations == 0) throw ConfigError("aco: iterations must be >= 1");
    if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("aco: need 0 < rho < 1");
    if (!(boost > 1.0 && hinder > 0.0 && hinder < 1.0)) throw ConfigError("aco: need boost > 1 > hinder > 0");
    if (!(epsilon > 0.0)) throw ConfigError("aco: epsilon must be > 0");
    if (!(elite_fraction > 0.0 && elite_fraction <= 1.0)) throw ConfigError("aco: need 0 < elite_fraction <= 1");
    if (!(tau_initial > 0.0 && tau_floor > 0.0 && tau_floor <= tau_initial))
        throw ConfigError("aco: need 0 < tau_floor <= tau_initial");
    if (!(reward_valid > 0.0 && reward_invalid > 0.0)) throw ConfigError("aco: rewards must be positive");
}

PheromoneMap::PheromoneMap(const LayerAssignment& layers, double tau_initial, double tau_floor)
    : num_nodes_(layers.layer_of.size()),
      universe_(available_edge_universe(layers)),
      tau_(universe_.size(), tau_initial),
      index_(num_nodes_ * num_nodes_, -1),
      floor_(tau_floor) {
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        const Edge e = universe_[i].edge;
        index_[e.u * num_nodes_ + e.v] = static_cast<std::int32_t>(i);
    }
}

void PheromoneMap::set_tau(std::size_t i, double value) { tau_[i] = std::max(value, floor_); }

std::optional<std::size_t> PheromoneMap::index_of(Edge e) const {
    if (e.u >= num_nodes_ || e.v >= num_nodes_) return std::nullopt;
    const std::int32_t i = index_[e.u * num_nodes_ + e.v];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
}

Graph construct_ant_graph(const PheromoneMap& pher, std::size_t m, Rng& rng) {
    const std::size_t total = pher.size();
    if (m > total)
        throw InfeasibleEdgeCount("m=" + std::to_string(m) + " exceeds the " + std::to_string(total) +
                                  " available edges");
    // Exponential race: edge i finishes at Exp(1)/tau_i. The order of finishing
    // times has the law of sequential draws proportional to tau without
    // replacement, so the first m finishers are the ant's edges.
    std::vector<std::pair<double, std::uint32_t>> race(total);
    for (std::size_t i = 0; i < total; ++i) {
        const double u = std::generate_canonical<double, 53>(rng);
        race[i] = {-std::log1p(-u) / pher.tau_at(i), static_cast<std::uint32_t>(i)};
    }
    std::partial_sort(race.begin(), race.begin() + static_cast<std::ptrdiff_t>(m), race.end());

    std::vector<Edge> chosen;
    chosen.reserve(m);
    for (std::size_t i = 0; i < m; ++i) chosen.push_back(pher.universe()[race[i].second].edge);
    return Graph::from_edges(pher.num_nodes(), chosen);
}

AntSolution score_reward(Graph g, const AcoParams& params, const Constraints& c, Rng& rng) {
    AntSolution out;
    out.cc = clustering_coefficient(recount_triangles_triplets(g));
    thread_local BfsWorkspace ws;
    out.d_hat = double_sweep_estimate(g, rng, ws);
    const bool diam_below_max = out.d_hat.connected && *out.d_hat.lower <= c.diam_max;
    const double numerator = diam_below_max ? params.reward_valid : params.reward_invalid;
    out.reward = numerator / (params.epsilon + std::abs(target_cc(c) - out.cc));
    out.valid = c.cc_ok(out.cc) && out.d_hat.connected && c.diam_ok(*out.d_hat.lower);
    out.graph = std::move(g);
    return out;
}

double deposit_weight(double cc, double c_star, bool intra, const AcoParams& params) noexcept {
    if (cc < c_star) return intra ? params.boost : params.hinder;
    if (cc > c_star) return intra ? params.hinder : params.boost;
    return 1.0;
}

void update_pheromones(PheromoneMap& pher, std::span<const AntSolution> ranked, const AcoParams& params,
                       double c_star) {
    std::vector<double> tau(pher.tau().begin(), pher.tau().end());
    for (double& t : tau) t *= 1.0 - params.rho;

    const auto elite = std::min<std::size_t>(
        ranked.size(),
        static_cast<std::size_t>(std::ceil(params.elite_fraction * static_cast<double>(ranked.size()))));
    for (std::size_t a = 0; a < elite; ++a) {
        const AntSolution& sol = ranked[a];
        for (const Edge& e : sol.graph.edges()) {
            const auto idx = pher.index_of(e);
            if (!idx) continue;
            const bool intra = pher.universe()[*idx].intra;
            tau[*idx] += sol.reward * deposit_weight(sol.cc, c_star, intra, params);
        }
    }
    for (std::size_t i = 0; i < tau.size(); ++i) pher.set_tau(i, tau[i]);
}

AcoResult run_aco(const Constraints& c, const AcoParams& params, std::size_t target_count, Rng& rng) {
    params.validate();
    AcoResult result;
    result.layers = build_layers(c.n, c.diam_min, rng);
    const std::uint64_t available = available_edge_count(result.layers.layer_sizes);
    if (c.m > available)
        throw InfeasibleEdgeCount("m=" + std::to_string(c.m) + " exceeds the " + std::to_string(available) +
                                  " edges allowed by " + std::to_string(result.layers.num_layers()) + " layers");
    if (target_count == 0) return result;

    PheromoneMap pher(result.layers, params.tau_initial, params.tau_floor);
    const double c_star = target_cc(c);
    std::set<std::vector<Edge>> seen;
    std::vector<AntSolution> ants;
    ants.reserve(params.ants);

    for (std::size_t t = 0; t < params.iterations; ++t) {
        result.iterations_run = t + 1;
        ants.clear();
        for (std::size_t k = 0; k < params.ants; ++k)
            ants.push_back(score_reward(construct_ant_graph(pher, c.m, rng), params, c, rng));

        for (const AntSolution& ant : ants) {
            if (!ant.valid) continue;
            const DiameterEstimate exact = exact_diameter(ant.graph);
            if (!exact.connected || !c.diam_ok(*exact.exact)) continue;
            if (!seen.insert(ant.graph.canonical_edges()).second) continue;
            AntSolution verified = ant;
            verified.d_hat.exact = exact.exact;
            result.solutions.push_back(std::move(verified));
            if (result.solutions.size() >= target_count) return result;
        }

        std::stable_sort(ants.begin(), ants.end(),
                         [](const AntSolution& a, const AntSolution& b) { return a.reward > b.reward; });
        update_pheromones(pher, ants, params, c_star);
    }
    return result;
}

}  // namespace cgg
