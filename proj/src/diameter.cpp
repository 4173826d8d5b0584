#include "cgg/diameter.hpp"

#include <algorithm>

#include "cgg/errors.hpp"

namespace cgg {

Eccentricity BfsWorkspace::run(const Graph& g, Node source) {
    const std::size_t n = g.num_nodes();
    if (source >= n) throw InvalidGraph("BFS source out of range");
    dist_.assign(n, kInfiniteDiameter);
    queue_.resize(n);

    std::size_t head = 0;
    std::size_t tail = 0;
    queue_[tail++] = source;
    dist_[source] = 0;

    Eccentricity out{0, source, 0};
    while (head < tail) {
        const Node x = queue_[head++];
        const std::uint32_t dx = dist_[x];
        if (dx > out.ecc || (dx == out.ecc && x < out.farthest)) {
            out.ecc = dx;
            out.farthest = x;
        }
        for (Node y : g.neighbors(x)) {
            if (dist_[y] != kInfiniteDiameter) continue;
            dist_[y] = dx + 1;
            queue_[tail++] = y;
        }
    }
    out.reached = tail;
    return out;
}

Eccentricity bfs_eccentricity(const Graph& g, Node v) {
    BfsWorkspace ws;
    return ws.run(g, v);
}

DiameterEstimate exact_diameter(const Graph& g) {
    DiameterEstimate out;
    const std::size_t n = g.num_nodes();
    if (n == 0) {
        out.connected = true;
        out.lower = out.exact = 0;
        return out;
    }
    BfsWorkspace ws;
    std::uint32_t diameter = 0;
    for (Node v = 0; v < n; ++v) {
        const Eccentricity e = ws.run(g, v);
        if (e.reached < n) return out;
        diameter = std::max(diameter, e.ecc);
    }
    out.connected = true;
    out.lower = out.exact = diameter;
    return out;
}

DiameterEstimate double_sweep_from(const Graph& g, Node start, BfsWorkspace& ws) {
    DiameterEstimate out;
    const std::size_t n = g.num_nodes();
    const Eccentricity first = ws.run(g, start);
    if (first.reached < n) return out;
    const Eccentricity second = ws.run(g, first.farthest);
    out.connected = true;
    out.lower = second.ecc;
    return out;
}

DiameterEstimate double_sweep_estimate(const Graph& g, Rng& rng, BfsWorkspace& ws) {
    if (g.num_nodes() == 0) {
        DiameterEstimate out;
        out.connected = true;
        out.lower = 0;
        return out;
    }
    std::uniform_int_distribution<Node> pick(0, static_cast<Node>(g.num_nodes() - 1));
    return double_sweep_from(g, pick(rng), ws);
}

DiameterEstimate double_sweep_estimate(const Graph& g, Rng& rng) {
    BfsWorkspace ws;
    return double_sweep_estimate(g, rng, ws);
}

}  // namespace cgg
