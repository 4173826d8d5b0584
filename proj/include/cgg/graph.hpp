#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cgg/random.hpp"

namespace cgg {

using Node = std::uint32_t;

// Unordered pair stored with u < v.
struct Edge {
    Node u = 0;
    Node v = 0;

    Edge() = default;
    Edge(Node a, Node b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool is_loop() const noexcept { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct TriangleLedger;
struct Swap;

// Simple undirected graph on nodes 0..n-1.
//
// Adjacency is kept as sorted arrays so neighbourhood intersection is a linear
// merge. The edge list is indexed so a uniform edge is one random index away;
// replace_edge() reuses the slot of the removed edge, which makes a swap
// followed by its inverse restore the exact same object state.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t num_nodes() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::size_t degree(Node x) const { return adjacency_[x].size(); }
    std::span<const Node> neighbors(Node x) const { return adjacency_[x]; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge_at(std::size_t slot) const { return edges_[slot]; }

    bool has_edge(Node a, Node b) const;

    // Throws InvalidGraph on loops, duplicates or out-of-range nodes.
    void add_edge(Node a, Node b);
    // Throws InvalidGraph if the edge is absent.
    void remove_edge(Node a, Node b);
    // Removes `old_edge` and inserts `new_edge` into the same edge slot.
    void replace_edge(Edge old_edge, Edge new_edge);

    std::uint64_t max_edges() const noexcept {
        const std::uint64_t n = num_nodes();
        return n * (n - (n > 0 ? 1 : 0)) / 2;
    }

    // Sorted edge list; identical for graphs with the same edge set.
    std::vector<Edge> canonical_edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend double apply_swap_with_ledger(Graph&, TriangleLedger&, const Swap&);

private:
    // Two halves of replace_edge(); between them the slot is vacant.
    std::uint32_t detach(Edge e);
    void attach(Edge e, std::uint32_t slot);

    std::uint64_t key(Edge e) const noexcept {
        return static_cast<std::uint64_t>(e.u) * num_nodes() + e.v;
    }
    void check_node(Node x) const;
    void link(Node a, Node b);
    void unlink(Node a, Node b);

    std::vector<std::vector<Node>> adjacency_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::uint32_t> slot_;
};

// Running triangle and triplet counts of a graph.
struct TriangleLedger {
    std::uint64_t triangles = 0;
    std::uint64_t triplets = 0;

    friend bool operator==(const TriangleLedger&, const TriangleLedger&) = default;
};

// Move (remove.u, remove.v) -> (insert.u, insert.v).
struct Swap {
    Edge remove;
    Edge insert;

    Swap inverse() const noexcept { return {insert, remove}; }
    friend bool operator==(const Swap&, const Swap&) = default;
};

// 3*triangles / triplets, and 0 for a graph without triplets.
double clustering_coefficient(const TriangleLedger& ledger) noexcept;

std::size_t common_neighbor_count(const Graph& g, Node a, Node b);

// Triangles counted per edge as |N_u ∩ N_v| / 3; triplets as Σ C(δ_i, 2).
TriangleLedger recount_triangles_triplets(const Graph& g);

// tr(A^3) by dense matrix products. Independent of the neighbourhood count.
std::uint64_t adjacency_cube_trace(const Graph& g);

// Clustering coefficient as (tr(A^3)/2) / Σ C(δ_i, 2).
double clustering_coefficient_trace(const Graph& g);

// Throws InvalidSwap unless `s.remove` is an edge, `s.insert` is a non-loop
// non-edge and the two differ.
void check_swap(const Graph& g, const Swap& s);

// Ledger of the graph obtained by applying `s`, without mutating `g`.
// Deletion is accounted first; insertion terms refer to the intermediate graph.
TriangleLedger preview_swap(const Graph& g, const TriangleLedger& ledger, const Swap& s);

// Applies `s` to `g` and updates `ledger` incrementally in O(δ_max).
// Returns the clustering coefficient of the new graph.
double apply_swap_with_ledger(Graph& g, TriangleLedger& ledger, const Swap& s);

Edge sample_random_edge(const Graph& g, Rng& rng);

// Uniform over node pairs that are not edges. Rejection sampling below
// density 0.95, explicit enumeration above. Throws CompleteGraph.
Edge sample_random_non_edge(const Graph& g, Rng& rng);

bool is_connected(const Graph& g);

}  // namespace cgg
