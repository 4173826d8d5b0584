#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cgg/graph.hpp"
#include "cgg/random.hpp"

namespace cgg {

inline constexpr std::uint32_t kInfiniteDiameter = std::numeric_limits<std::uint32_t>::max();

// Diameter information for one graph.
//
// For a connected graph `lower` satisfies lower <= diam <= 2*lower. `exact` is
// filled only by an all-pairs computation. Disconnected graphs carry neither
// and report kInfiniteDiameter.
struct DiameterEstimate {
    bool connected = false;
    std::optional<std::uint32_t> lower;
    std::optional<std::uint32_t> exact;

    bool exact_known() const noexcept { return exact.has_value(); }
    // Best available value: exact if known, else the lower bound.
    std::uint32_t value() const noexcept {
        if (!connected) return kInfiniteDiameter;
        return exact ? *exact : lower.value_or(kInfiniteDiameter);
    }
    friend bool operator==(const DiameterEstimate&, const DiameterEstimate&) = default;
};

struct Eccentricity {
    std::uint32_t ecc = 0;
    Node farthest = 0;      // smallest label among nodes at distance ecc
    std::size_t reached = 0;
};

// Reusable BFS buffers so repeated sweeps on one graph size do not allocate.
class BfsWorkspace {
public:
    Eccentricity run(const Graph& g, Node source);

private:
    std::vector<std::uint32_t> dist_;
    std::vector<Node> queue_;
};

Eccentricity bfs_eccentricity(const Graph& g, Node v);

// BFS from every node, O(n(n+m)).
DiameterEstimate exact_diameter(const Graph& g);

// BFS from a uniform random node to its farthest node w, then BFS from w.
DiameterEstimate double_sweep_estimate(const Graph& g, Rng& rng);
DiameterEstimate double_sweep_estimate(const Graph& g, Rng& rng, BfsWorkspace& ws);

// Same, with a fixed first-sweep source.
DiameterEstimate double_sweep_from(const Graph& g, Node start, BfsWorkspace& ws);

}  // namespace cgg
