#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace signlab {

/// Undirected edge stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the edge
/// list is kept sorted so two graphs with the same edge set compare equal.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v >= n)
                throw std::out_of_range("Graph: edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} outside 0.." + std::to_string(n - 1));
            if (e.u == e.v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(e.u));
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
            throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(dup->u) + "," +
                                        std::to_string(dup->v) + "}");
        adjacency_.assign(static_cast<std::size_t>(n), {});
        index_.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
            index_.emplace(key(e.u, e.v), static_cast<int>(i));
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nbrs : adjacency_) d = std::max(d, static_cast<int>(nbrs.size()));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (const auto& nbrs : adjacency_) d = std::min(d, static_cast<int>(nbrs.size()));
        return d;
    }

    /// Common degree when every vertex has the same degree.
    std::optional<int> regular_degree() const {
        if (n_ == 0) return std::nullopt;
        return max_degree() == min_degree() ? std::optional<int>(max_degree()) : std::nullopt;
    }

    /// Position of {u,v} in edges(), or -1.
    int edge_index(int u, int v) const {
        auto it = index_.find(key(std::min(u, v), std::max(u, v)));
        return it == index_.end() ? -1 : it->second;
    }
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::unordered_map<std::uint64_t, int> index_;
};

/// A graph with a sign in {-1,+1} on every edge, aligned with graph().edges().
class SignedGraph {
public:
    SignedGraph() = default;

    SignedGraph(Graph g, std::vector<int> signs) : graph_(std::move(g)), signs_(std::move(signs)) {
        if (signs_.size() != graph_.size())
            throw std::invalid_argument("SignedGraph: " + std::to_string(signs_.size()) + " signs for " +
                                        std::to_string(graph_.size()) + " edges");
        for (int s : signs_)
            if (s != 1 && s != -1) throw std::invalid_argument("SignedGraph: sign must be +1 or -1");
    }

    /// Every edge signed +1.
    static SignedGraph all_positive(Graph g) {
        std::vector<int> s(g.size(), 1);
        return SignedGraph(std::move(g), std::move(s));
    }

    /// Builds from (u, v, sign) triples in any order.
    static SignedGraph from_triples(int n, const std::vector<std::tuple<int, int, int>>& triples) {
        std::vector<Edge> edges;
        edges.reserve(triples.size());
        for (const auto& [u, v, s] : triples) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        std::vector<int> signs(g.size(), 0);
        for (const auto& [u, v, s] : triples) signs[static_cast<std::size_t>(g.edge_index(u, v))] = s;
        return SignedGraph(std::move(g), std::move(signs));
    }

    const Graph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }
    const std::vector<int>& signs() const noexcept { return signs_; }

    /// Sign of edge uv; 0 when u and v are not adjacent.
    int sign(int u, int v) const {
        const int i = graph_.edge_index(u, v);
        return i < 0 ? 0 : signs_[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    Graph graph_;
    std::vector<int> signs_;
};

inline IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(static_cast<std::size_t>(g.order()), static_cast<std::size_t>(g.order()));
    for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
    return a;
}

/// A^sigma: sigma(uv) on edges, zero elsewhere.
inline IntMatrix signed_adjacency(const SignedGraph& sg) {
    const auto n = static_cast<std::size_t>(sg.order());
    IntMatrix a(n, n);
    const auto& edges = sg.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) a(edges[i].u, edges[i].v) = a(edges[i].v, edges[i].u) = sg.signs()[i];
    return a;
}

/// Reads a symmetric {0,+-1} matrix with zero diagonal back into a signed graph.
inline SignedGraph signed_graph_from_matrix(const IntMatrix& a) {
    if (!a.square() || !a.is_symmetric()) throw std::invalid_argument("signed_graph_from_matrix: matrix not symmetric");
    std::vector<std::tuple<int, int, int>> triples;
    const int n = static_cast<int>(a.rows());
    for (int i = 0; i < n; ++i) {
        if (a(i, i) != 0) throw std::invalid_argument("signed_graph_from_matrix: nonzero diagonal");
        for (int j = i + 1; j < n; ++j) {
            const auto x = a(i, j);
            if (x == 0) continue;
            if (x != 1 && x != -1) throw std::invalid_argument("signed_graph_from_matrix: entry outside {0,+-1}");
            triples.emplace_back(i, j, static_cast<int>(x));
        }
    }
    return SignedGraph::from_triples(n, triples);
}

/// Applies D A D for the diagonal D = diag(switching).
inline SignedGraph switch_signing(const SignedGraph& sg, std::span<const int> switching) {
    if (switching.size() != static_cast<std::size_t>(sg.order()))
        throw std::invalid_argument("switch_signing: switching vector has wrong length");
    std::vector<int> signs = sg.signs();
    const auto& edges = sg.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) signs[i] *= switching[edges[i].u] * switching[edges[i].v];
    return SignedGraph(sg.graph(), std::move(signs));
}

inline SignedGraph negate_signing(const SignedGraph& sg) {
    std::vector<int> signs = sg.signs();
    for (int& s : signs) s = -s;
    return SignedGraph(sg.graph(), std::move(signs));
}

// ---------------------------------------------------------------------------
// Named graphs

inline Graph complete_graph(int m) {
    if (m < 1) throw std::invalid_argument("complete_graph: m must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    return Graph(m, std::move(edges));
}

/// The complement of K_m: m isolated vertices.
inline Graph empty_graph(int m) { return Graph(m, {}); }

inline Graph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: m must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    return Graph(m, std::move(edges));
}

inline Graph path_graph(int m) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return Graph(m, std::move(edges));
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(edges));
}

/// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.order(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Products and structure

/// G o H. Vertex (x, y) gets index x*|V(H)| + y.
inline Graph lexicographic_product(const Graph& g, const Graph& h) {
    const int nh = h.order();
    std::vector<Edge> edges;
    edges.reserve(g.size() * static_cast<std::size_t>(nh * nh) + static_cast<std::size_t>(g.order()) * h.size());
    for (const Edge& e : g.edges())
        for (int y = 0; y < nh; ++y)
            for (int t = 0; t < nh; ++t) edges.emplace_back(e.u * nh + y, e.v * nh + t);
    for (int x = 0; x < g.order(); ++x)
        for (const Edge& f : h.edges()) edges.emplace_back(x * nh + f.u, x * nh + f.v);
    return Graph(g.order() * nh, std::move(edges));
}

/// Two-colouring (0/1 per vertex) when one exists. Each component is coloured
/// by BFS from its smallest vertex, which gets colour 0.
inline std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue;
    for (int root = 0; root < g.order(); ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

/// Component label per vertex, labels numbered in order of smallest member.
inline std::vector<int> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int root = 0; root < g.order(); ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    const auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

struct DecompositionReport {
    bool valid = false;
    std::vector<Edge> shared;     // edges lying in more than one part
    std::vector<Edge> missing;    // edges of g covered by no part
    std::vector<Edge> foreign;    // part edges that are not edges of g
};

/// Checks that the parts are edge-disjoint and together cover E(g) exactly.
inline DecompositionReport verify_decomposition(const Graph& g, std::span<const Graph> parts) {
    DecompositionReport report;
    std::vector<int> cover(g.size(), 0);
    for (const Graph& part : parts) {
        if (part.order() != g.order())
            throw std::invalid_argument("verify_decomposition: part has " + std::to_string(part.order()) +
                                        " vertices, expected " + std::to_string(g.order()));
        for (const Edge& e : part.edges()) {
            const int i = g.edge_index(e.u, e.v);
            if (i < 0) {
                report.foreign.push_back(e);
                continue;
            }
            if (++cover[static_cast<std::size_t>(i)] == 2) report.shared.push_back(e);
        }
    }
    for (std::size_t i = 0; i < cover.size(); ++i)
        if (cover[i] == 0) report.missing.push_back(g.edges()[i]);
    report.valid = report.shared.empty() && report.missing.empty() && report.foreign.empty();
    return report;
}

}  // namespace signlab
