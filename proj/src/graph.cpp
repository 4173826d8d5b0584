#include "cgg/graph.hpp"

#include <algorithm>
#include <string>

#include "cgg/errors.hpp"

namespace cgg {

namespace {

std::string pair_str(Node a, Node b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::uint64_t choose2(std::uint64_t k) { return k * (k - (k > 0 ? 1 : 0)) / 2; }

}  // namespace

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_node(Node x) const {
    if (x >= num_nodes())
        throw InvalidGraph("node " + std::to_string(x) + " out of range for n=" +
                           std::to_string(num_nodes()));
}

bool Graph::has_edge(Node a, Node b) const {
    if (a == b || a >= num_nodes() || b >= num_nodes()) return false;
    const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const Node target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

void Graph::link(Node a, Node b) {
    auto& na = adjacency_[a];
    na.insert(std::lower_bound(na.begin(), na.end(), b), b);
    auto& nb = adjacency_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

void Graph::unlink(Node a, Node b) {
    auto& na = adjacency_[a];
    na.erase(std::lower_bound(na.begin(), na.end(), b));
    auto& nb = adjacency_[b];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
}

void Graph::add_edge(Node a, Node b) {
    check_node(a);
    check_node(b);
    if (a == b) throw InvalidGraph("self-loop at node " + std::to_string(a));
    if (has_edge(a, b)) throw InvalidGraph("duplicate edge " + pair_str(a, b));
    const Edge e(a, b);
    slot_.emplace(key(e), static_cast<std::uint32_t>(edges_.size()));
    edges_.push_back(e);
    link(a, b);
}

void Graph::remove_edge(Node a, Node b) {
    const Edge e(a, b);
    auto it = slot_.find(key(e));
    if (a == b || a >= num_nodes() || b >= num_nodes() || it == slot_.end())
        throw InvalidGraph("edge " + pair_str(a, b) + " not present");
    const std::uint32_t slot = it->second;
    slot_.erase(it);
    if (slot + 1 != edges_.size()) {
        edges_[slot] = edges_.back();
        slot_[key(edges_[slot])] = slot;
    }
    edges_.pop_back();
    unlink(e.u, e.v);
}

std::uint32_t Graph::detach(Edge e) {
    auto it = slot_.find(key(e));
    if (e.u >= num_nodes() || e.v >= num_nodes() || it == slot_.end())
        throw InvalidGraph("edge " + pair_str(e.u, e.v) + " not present");
    const std::uint32_t slot = it->second;
    slot_.erase(it);
    unlink(e.u, e.v);
    return slot;
}

void Graph::attach(Edge e, std::uint32_t slot) {
    edges_[slot] = e;
    slot_.emplace(key(e), slot);
    link(e.u, e.v);
}

void Graph::replace_edge(Edge old_edge, Edge new_edge) {
    if (!has_edge(old_edge.u, old_edge.v))
        throw InvalidGraph("edge " + pair_str(old_edge.u, old_edge.v) + " not present");
    check_node(new_edge.u);
    check_node(new_edge.v);
    if (new_edge.is_loop()) throw InvalidGraph("self-loop at node " + std::to_string(new_edge.u));
    if (has_edge(new_edge.u, new_edge.v))
        throw InvalidGraph("duplicate edge " + pair_str(new_edge.u, new_edge.v));
    attach(new_edge, detach(old_edge));
}

std::vector<Edge> Graph::canonical_edges() const {
    std::vector<Edge> out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

double clustering_coefficient(const TriangleLedger& ledger) noexcept {
    if (ledger.triplets == 0) return 0.0;
    return 3.0 * static_cast<double>(ledger.triangles) / static_cast<double>(ledger.triplets);
}

std::size_t common_neighbor_count(const Graph& g, Node a, Node b) {
    const auto na = g.neighbors(a);
    const auto nb = g.neighbors(b);
    std::size_t count = 0;
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

TriangleLedger recount_triangles_triplets(const Graph& g) {
    TriangleLedger out;
    std::uint64_t per_edge = 0;
    for (const Edge& e : g.edges()) per_edge += common_neighbor_count(g, e.u, e.v);
    out.triangles = per_edge / 3;
    for (Node x = 0; x < g.num_nodes(); ++x) out.triplets += choose2(g.degree(x));
    return out;
}

std::uint64_t adjacency_cube_trace(const Graph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::uint64_t> adj(n * n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u * n + e.v] = 1;
        adj[e.v * n + e.u] = 1;
    }
    // tr(A^3) = Σ_ij (A^2)_ij A_ji
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (adj[j * n + i] == 0) continue;
            std::uint64_t sq = 0;
            for (std::size_t k = 0; k < n; ++k) sq += adj[i * n + k] * adj[k * n + j];
            trace += sq;
        }
    }
    return trace;
}

double clustering_coefficient_trace(const Graph& g) {
    std::uint64_t triplets = 0;
    for (Node x = 0; x < g.num_nodes(); ++x) triplets += choose2(g.degree(x));
    if (triplets == 0) return 0.0;
    return (0.5 * static_cast<double>(adjacency_cube_trace(g))) / static_cast<double>(triplets);
}

void check_swap(const Graph& g, const Swap& s) {
    const std::size_t n = g.num_nodes();
    if (s.remove.u >= n || s.remove.v >= n || s.insert.u >= n || s.insert.v >= n)
        throw InvalidSwap("swap references a node outside the graph");
    if (s.remove == s.insert)
        throw InvalidSwap("swap removes and inserts the same pair " + pair_str(s.remove.u, s.remove.v));
    if (!g.has_edge(s.remove.u, s.remove.v))
        throw InvalidSwap("removed pair " + pair_str(s.remove.u, s.remove.v) + " is not an edge");
    if (s.insert.is_loop()) throw InvalidSwap("inserted pair is a self-loop");
    if (g.has_edge(s.insert.u, s.insert.v))
        throw InvalidSwap("inserted pair " + pair_str(s.insert.u, s.insert.v) + " is already an edge");
}

TriangleLedger preview_swap(const Graph& g, const TriangleLedger& ledger, const Swap& s) {
    check_swap(g, s);
    const auto [u, v] = s.remove;
    const auto [x, y] = s.insert;

    // Endpoint of the removed edge opposite to `a`, when `a` is one of its ends.
    auto partner = [&](Node a) -> long long {
        if (a == u) return v;
        if (a == v) return u;
        return -1;
    };

    std::uint64_t created = common_neighbor_count(g, x, y);
    // At most one of x, y touches the removed edge; if its partner was a common
    // neighbour of x and y, the deletion already broke that wedge.
    if (const auto w = partner(x); w >= 0 && g.has_edge(static_cast<Node>(w), y)) --created;
    if (const auto w = partner(y); w >= 0 && g.has_edge(static_cast<Node>(w), x)) --created;

    const std::uint64_t dx = g.degree(x) - (partner(x) >= 0 ? 1 : 0);
    const std::uint64_t dy = g.degree(y) - (partner(y) >= 0 ? 1 : 0);

    TriangleLedger out;
    out.triangles = ledger.triangles - common_neighbor_count(g, u, v) + created;
    out.triplets = ledger.triplets - (g.degree(u) + g.degree(v) - 2) + dx + dy;
    return out;
}

double apply_swap_with_ledger(Graph& g, TriangleLedger& ledger, const Swap& s) {
    check_swap(g, s);
    const auto [u, v] = s.remove;
    const auto [x, y] = s.insert;

    ledger.triangles -= common_neighbor_count(g, u, v);
    ledger.triplets -= g.degree(u) + g.degree(v) - 2;
    const std::uint32_t slot = g.detach(s.remove);
    ledger.triangles += common_neighbor_count(g, x, y);
    ledger.triplets += g.degree(x) + g.degree(y);
    g.attach(s.insert, slot);
    return clustering_coefficient(ledger);
}

Edge sample_random_edge(const Graph& g, Rng& rng) {
    if (g.num_edges() == 0) throw InvalidGraph("cannot sample an edge from an empty edge set");
    std::uniform_int_distribution<std::size_t> pick(0, g.num_edges() - 1);
    return g.edge_at(pick(rng));
}

Edge sample_random_non_edge(const Graph& g, Rng& rng) {
    const std::uint64_t total = g.max_edges();
    const std::uint64_t missing = total - g.num_edges();
    if (missing == 0) throw CompleteGraph();
    const std::size_t n = g.num_nodes();

    if (static_cast<double>(g.num_edges()) <= 0.95 * static_cast<double>(total)) {
        std::uniform_int_distribution<Node> node(0, static_cast<Node>(n - 1));
        for (;;) {
            const Node a = node(rng);
            const Node b = node(rng);
            if (a != b && !g.has_edge(a, b)) return Edge(a, b);
        }
    }

    std::uniform_int_distribution<std::uint64_t> pick(0, missing - 1);
    std::uint64_t target = pick(rng);
    for (Node a = 0; a < n; ++a) {
        const auto na = g.neighbors(a);
        auto it = std::upper_bound(na.begin(), na.end(), a);
        Node next = a + 1;
        // walk the gaps between neighbours above a
        for (; next < n; ++next) {
            if (it != na.end() && *it == next) {
                ++it;
                continue;
            }
            if (target == 0) return Edge(a, next);
            --target;
        }
    }
    throw CompleteGraph();
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.num_nodes();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Node x = stack.back();
        stack.pop_back();
        for (Node y : g.neighbors(x)) {
            if (seen[y]) continue;
            seen[y] = 1;
            ++reached;
            stack.push_back(y);
        }
    }
    return reached == n;
}

}  // namespace cgg
