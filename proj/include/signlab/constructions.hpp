#pragma once

#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "conference.hpp"
#include "graph.hpp"
#include "partition.hpp"

namespace signlab {

// ---------------------------------------------------------------------------
// Signed complete graphs from a conference matrix

/// Which of the three complete-graph signings to build from a conference
/// matrix of order n: K_{n+1}, K_{n+2} or K_{n+3}.
enum class CompleteCase { one = 1, two = 2, three = 3 };

inline CompleteCase parse_complete_case(int c) {
    if (c < 1 || c > 3) throw std::invalid_argument("unknown case " + std::to_string(c) + " (expected 1, 2 or 3)");
    return static_cast<CompleteCase>(c);
}

/// Number of vertices placed in front of the core block.
inline int leading_vertices(CompleteCase c) {
    switch (c) {
        case CompleteCase::one: return 2;
        case CompleteCase::two: return 3;
        case CompleteCase::three: return 4;
    }
    return 0;
}

/// Signs K_m, m = n + case. The core H_{n-1} sits on the trailing n-1
/// vertices and every edge from the leading vertices into it is +1.
///   case 1: leading {a},{b}, edge ab = +1.
///   case 2: leading {a},{b},{c}, all +1.
///   case 3: leading C1 = {u1,v1} (0,1), C2 = {u2,v2} (2,3) with
///           u1v1 = -1, u2v2 = +1, u1u2 = v1v2 = +1, u1v2 = v1u2 = -1,
///           which gives the quotient rows (-1, 0, n-1) and (0, 1, n-1).
inline SignedGraph sign_complete_from_conference(const ConferenceMatrix& c, CompleteCase which) {
    if (!c.normalized()) throw std::invalid_argument("sign_complete_from_conference: conference matrix is not normalized");
    if (c.order() < 6) throw std::invalid_argument("sign_complete_from_conference: requires order n >= 6");
    const IntMatrix core = core_matrix(c);
    const int lead = leading_vertices(which);
    const int n_core = static_cast<int>(core.rows());
    const int m = lead + n_core;

    IntMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 0; i < lead; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) a(i, j) = a(j, i) = 1;
    for (int i = 0; i < n_core; ++i)
        for (int j = 0; j < n_core; ++j) a(lead + i, lead + j) = core(i, j);

    if (which == CompleteCase::three) {
        auto set = [&](int u, int v, int s) { a(u, v) = a(v, u) = s; };
        set(0, 1, -1);
        set(2, 3, +1);
        set(0, 2, +1);
        set(1, 3, +1);
        set(0, 3, -1);
        set(1, 2, -1);
    }
    return signed_graph_from_matrix(a);
}

/// The equitable partition that goes with sign_complete_from_conference.
inline Partition complete_case_partition(CompleteCase which, int conference_order) {
    const int lead = leading_vertices(which);
    const int m = lead + conference_order - 1;
    std::vector<std::vector<int>> cells;
    if (which == CompleteCase::three) {
        cells = {{0, 1}, {2, 3}};
    } else {
        for (int i = 0; i < lead; ++i) cells.push_back({i});
    }
    std::vector<int> core;
    for (int v = lead; v < m; ++v) core.push_back(v);
    cells.push_back(std::move(core));
    return Partition(m, std::move(cells));
}

/// Closed-form spectrum of the quotient B for each case, ascending.
inline std::vector<double> case_quotient_eigenvalues(CompleteCase which, int n) {
    if (n < 6) throw std::invalid_argument("case_quotient_eigenvalues: requires n >= 6");
    const double x = static_cast<double>(n);
    switch (which) {
        case CompleteCase::one: {
            const double r = std::sqrt(8.0 * x - 15.0);
            return {0.5 * (1.0 - r), -1.0, 0.5 * (r + 1.0)};
        }
        case CompleteCase::two: {
            const double r = std::sqrt(3.0 * x - 2.0);
            return {1.0 - r, -1.0, -1.0, r + 1.0};
        }
        case CompleteCase::three: {
            const double r = std::sqrt(4.0 * x - 3.0);
            return {-r, 0.0, r};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Signed lexicographic products

/// Signs G o K2-bar from a decomposition E(G) = E(H1) + E(H2). Vertex (x, j)
/// is 2x + j. An H1 edge xy becomes a constant C4 of sign sigma1(xy); an H2
/// edge becomes the alternating C4 with (x,j)(y,j) = sigma2(xy) and
/// (x,j)(y,1-j) = -sigma2(xy).
inline SignedGraph lex_k2_signing(const Graph& g, const SignedGraph& h1, const SignedGraph& h2) {
    const Graph parts[] = {h1.graph(), h2.graph()};
    if (!verify_decomposition(g, parts).valid)
        throw std::invalid_argument("lex_k2_signing: H1 and H2 do not decompose E(G)");

    std::vector<std::tuple<int, int, int>> triples;
    triples.reserve(4 * g.size());
    for (std::size_t e = 0; e < h1.graph().size(); ++e) {
        const Edge& xy = h1.graph().edges()[e];
        const int s = h1.signs()[e];
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) triples.emplace_back(2 * xy.u + j, 2 * xy.v + k, s);
    }
    for (std::size_t e = 0; e < h2.graph().size(); ++e) {
        const Edge& xy = h2.graph().edges()[e];
        const int s = h2.signs()[e];
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) triples.emplace_back(2 * xy.u + j, 2 * xy.v + k, j == k ? s : -s);
    }
    return SignedGraph::from_triples(2 * g.order(), triples);
}

/// Signs G o K4-bar from a signing of G. Vertex (x, i) is 4x + i. Each edge
/// xy becomes a K_{4,4} signed sigma(xy) except the four parallel edges
/// (x,i)(y,i), which carry -sigma(xy).
inline SignedGraph lex_k4_signing(const SignedGraph& sigma) {
    const Graph& g = sigma.graph();
    std::vector<std::tuple<int, int, int>> triples;
    triples.reserve(16 * g.size());
    for (std::size_t e = 0; e < g.size(); ++e) {
        const Edge& xy = g.edges()[e];
        const int s = sigma.signs()[e];
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) triples.emplace_back(4 * xy.u + i, 4 * xy.v + k, i == k ? -s : s);
    }
    return SignedGraph::from_triples(4 * g.order(), triples);
}

// ---------------------------------------------------------------------------
// 2-lifts

/// 2-lift driven by tau: u_j is 2u + j; tau(uv) = +1 gives {u0v0, u1v1},
/// tau(uv) = -1 gives {u0v1, u1v0}.
inline Graph two_lift(const SignedGraph& tau) {
    std::vector<Edge> edges;
    edges.reserve(2 * tau.graph().size());
    for (std::size_t e = 0; e < tau.graph().size(); ++e) {
        const Edge& uv = tau.graph().edges()[e];
        const int cross = tau.signs()[e] > 0 ? 0 : 1;
        edges.emplace_back(2 * uv.u, 2 * uv.v + cross);
        edges.emplace_back(2 * uv.u + 1, 2 * uv.v + 1 - cross);
    }
    return Graph(2 * tau.order(), std::move(edges));
}

inline void require_same_graph(const SignedGraph& a, const SignedGraph& b, const char* where) {
    if (!(a.graph() == b.graph())) throw std::invalid_argument(std::string(where) + ": signings are on different graphs");
}

/// The product signing tau = sigma * sigma' (entrywise on A).
inline SignedGraph product_signing(const SignedGraph& sigma, const SignedGraph& sigma_prime) {
    require_same_graph(sigma, sigma_prime, "product_signing");
    std::vector<int> s(sigma.signs().size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = sigma.signs()[i] * sigma_prime.signs()[i];
    return SignedGraph(sigma.graph(), std::move(s));
}

/// Lifts G along tau = sigma * sigma' and signs both lifted copies of uv with
/// sigma'(uv).
inline SignedGraph two_lift_signed(const SignedGraph& sigma, const SignedGraph& sigma_prime) {
    const SignedGraph tau = product_signing(sigma, sigma_prime);
    const Graph lifted = two_lift(tau);
    std::vector<int> signs(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        const Edge& e = lifted.edges()[i];
        signs[i] = sigma_prime.sign(e.u / 2, e.v / 2);
    }
    return SignedGraph(lifted, std::move(signs));
}

// ---------------------------------------------------------------------------
// Switching equivalence

struct EquivalenceResult {
    /// D with D A^sigma D = A^sigma' when the signings are equivalent.
    std::optional<std::vector<int>> switching;
    /// Otherwise a closed walk v0 v1 ... vk v0 on which the sign products of
    /// sigma and sigma' differ.
    std::vector<int> witness_cycle;

    bool equivalent() const noexcept { return switching.has_value(); }
};

/// Propagates d_u d_v = sigma(uv) sigma'(uv) along a BFS forest rooted at the
/// smallest vertex of each component (root gets +1), then checks every edge.
inline EquivalenceResult signing_equivalence(const SignedGraph& sigma, const SignedGraph& sigma_prime) {
    require_same_graph(sigma, sigma_prime, "signing_equivalence");
    const Graph& g = sigma.graph();
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    auto want = [&](int u, int v) { return sigma.sign(u, v) * sigma_prime.sign(u, v); };

    std::deque<int> queue;
    for (int root = 0; root < n; ++root) {
        if (d[root] != 0) continue;
        d[root] = 1;
        queue.push_back(root);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (d[w] != 0) continue;
                d[w] = d[u] * want(u, w);
                parent[w] = u;
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }

    for (const Edge& e : g.edges()) {
        if (d[e.u] * d[e.v] == want(e.u, e.v)) continue;
        // Tree paths from both ends up to their common ancestor, closed by e.
        std::vector<int> left{e.u}, right{e.v};
        int a = e.u, b = e.v;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                a = parent[a];
                left.push_back(a);
            } else {
                b = parent[b];
                right.push_back(b);
            }
        }
        right.pop_back();
        EquivalenceResult r;
        r.witness_cycle.assign(left.rbegin(), left.rend());
        r.witness_cycle.insert(r.witness_cycle.end(), right.begin(), right.end());
        return r;
    }
    return {std::move(d), {}};
}

/// Product of edge signs around a closed walk given as a vertex sequence.
inline int cycle_sign(const SignedGraph& sg, const std::vector<int>& cycle) {
    int s = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int x = sg.sign(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (x == 0) throw std::invalid_argument("cycle_sign: walk uses a non-edge");
        s *= x;
    }
    return s;
}

}  // namespace signlab
