#pragma once

// Helpers shared by the test binaries. The oracles here are written against
// the plain edge list so they do not reuse any library counting code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cgg/graph.hpp"
#include "cgg/random.hpp"
#include "cgg/sampler.hpp"

namespace testing {

using cgg::Edge;
using cgg::Graph;
using cgg::Node;

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Node, Node>> pairs) {
    Graph g(n);
    for (auto [a, b] : pairs) g.add_edge(a, b);
    return g;
}

inline std::vector<std::vector<char>> dense(const Graph& g) {
    std::vector<std::vector<char>> a(g.num_nodes(), std::vector<char>(g.num_nodes(), 0));
    for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

struct Counts {
    std::uint64_t triangles = 0;
    std::uint64_t triplets = 0;
};

// Triangles by checking every node triple; triplets as connected paths of
// length two counted per centre.
inline Counts brute_counts(const Graph& g) {
    const auto a = dense(g);
    const std::size_t n = g.num_nodes();
    Counts c;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (a[i][j] && a[j][k] && a[i][k]) ++c.triangles;
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t d = 0;
        for (std::size_t w = 0; w < n; ++w) d += a[v][w];
        c.triplets += d * (d > 0 ? d - 1 : 0) / 2;
    }
    return c;
}

inline double brute_cc(const Graph& g) {
    const Counts c = brute_counts(g);
    return c.triplets == 0 ? 0.0 : 3.0 * static_cast<double>(c.triangles) / static_cast<double>(c.triplets);
}

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// All-pairs shortest paths by Floyd-Warshall.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kUnreachable));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] == kUnreachable) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (d[k][j] != kUnreachable && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
        }
    return d;
}

// kUnreachable for disconnected graphs.
inline std::uint32_t fw_diameter(const Graph& g) {
    std::uint32_t best = 0;
    for (const auto& row : floyd_warshall(g))
        for (auto x : row) best = std::max(best, x);
    return best;
}

inline Graph random_gnm(std::size_t n, std::size_t m, cgg::Rng& rng) {
    std::vector<Edge> all;
    for (Node u = 0; u < n; ++u)
        for (Node v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(m);
    return Graph::from_edges(n, all);
}

// Random spanning tree (random attachment) plus extra random edges, so the
// result is connected with exactly min(m, C(n,2)) edges.
inline Graph random_connected(std::size_t n, std::size_t m, cgg::Rng& rng) {
    m = std::min(m, n * (n - 1) / 2);
    std::vector<Node> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        g.add_edge(order[i], order[pick(rng)]);
    }
    std::uniform_int_distribution<Node> node(0, static_cast<Node>(n - 1));
    while (g.num_edges() < m) {
        const Node a = node(rng), b = node(rng);
        if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
    }
    return g;
}

// Uniform labelled tree from a random Prüfer sequence.
inline Graph random_prufer_tree(std::size_t n, cgg::Rng& rng) {
    Graph g(n);
    if (n < 2) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<Node> node(0, static_cast<Node>(n - 1));
    std::vector<Node> seq(n - 2);
    for (auto& s : seq) s = node(rng);
    std::vector<std::size_t> deg(n, 1);
    for (Node s : seq) ++deg[s];
    for (Node s : seq) {
        Node leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        g.add_edge(leaf, s);
        --deg[leaf];
        --deg[s];
    }
    Node a = 0;
    while (deg[a] != 1) ++a;
    Node b = a + 1;
    while (deg[b] != 1) ++b;
    g.add_edge(a, b);
    return g;
}

// Same edge set under a node permutation.
inline Graph relabel(const Graph& g, const std::vector<Node>& perm) {
    Graph h(g.num_nodes());
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

// n=5: K4 on {1,2,3,4} plus the pendant edge 0-4. cc = 12/15.
inline Graph trap_fixture() {
    return make_graph(5, {{0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline cgg::Constraints trap_constraints() {
    cgg::Constraints c;
    c.n = 5;
    c.m = 7;
    c.cc_min = 0.7;
    c.cc_max = 0.9;
    c.diam_min = 1;
    c.diam_max = 4;
    return c;
}

inline bool brute_valid(const Graph& g, const cgg::Constraints& c) {
    const double cc = testing::brute_cc(g);
    const auto d = testing::fw_diameter(g);
    return c.cc_ok(cc) && d != testing::kUnreachable && c.diam_ok(d);
}

inline std::vector<Edge> all_pairs(std::size_t n) {
    std::vector<Edge> out;
    for (Node u = 0; u < n; ++u)
        for (Node v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

// Every graph on `n` nodes with `m` edges that the brute-force oracle accepts.
inline std::set<std::vector<Edge>> enumerate_valid(const cgg::Constraints& c) {
    const auto pairs = all_pairs(c.n);
    std::set<std::vector<Edge>> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != c.m) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1u << i)) edges.push_back(pairs[i]);
        const Graph g = Graph::from_edges(c.n, edges);
        if (brute_valid(g, c)) out.insert(g.canonical_edges());
    }
    return out;
}

// States reachable from g0 through single swaps whose result stays valid.
inline std::set<std::vector<Edge>> reachable(const Graph& g0, const cgg::Constraints& c) {
    std::set<std::vector<Edge>> seen{g0.canonical_edges()};
    std::vector<Graph> frontier{g0};
    const auto pairs = all_pairs(c.n);
    while (!frontier.empty()) {
        const Graph g = frontier.back();
        frontier.pop_back();
        for (const Edge& r : g.edges()) {
            for (const Edge& ins : pairs) {
                if (g.has_edge(ins.u, ins.v)) continue;
                Graph h = g;
                cgg::TriangleLedger l = cgg::recount_triangles_triplets(h);
                cgg::apply_swap_with_ledger(h, l, cgg::Swap{r, ins});
                if (!brute_valid(h, c)) continue;
                if (seen.insert(h.canonical_edges()).second) frontier.push_back(h);
            }
        }
    }
    return seen;
}

}  // namespace testing
