#pragma once

#include <random>
#include <string>
#include <vector>

#include <signlab/graph.hpp>
#include <signlab/io.hpp>

namespace fixtures {

using namespace signlab;

inline IntMatrix reference(const std::string& name) {
    return read_int_matrix_file(std::string(SIGNLAB_REFERENCE_DIR) + "/" + name);
}

/// u = 0, v = 1, w = 2, z = 3; edges uv, vw, wz, uz, vz.
inline Graph fig2_graph() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}); }

inline SignedGraph fig2_sigma() { return signed_graph_from_matrix(reference("fig2_sigma.txt")); }
inline SignedGraph fig2_sigma_prime() { return signed_graph_from_matrix(reference("fig2_sigma_prime.txt")); }

inline Graph cycle_through(int n, const std::vector<int>& walk) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < walk.size(); ++i) edges.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
    return Graph(n, std::move(edges));
}

/// Vertices u1 v1 u2 v2 u3 v3 = 0..5.
inline Graph fig1_h1() { return cycle_through(6, {0, 1, 2, 3, 4, 5}); }
inline Graph fig1_h2() { return cycle_through(6, {0, 3, 1, 5, 2, 4}); }

inline Graph fig1_graph() {
    std::vector<Edge> all = fig1_h1().edges();
    const Graph h2 = fig1_h2();
    all.insert(all.end(), h2.edges().begin(), h2.edges().end());
    return Graph(6, std::move(all));
}

inline SignedGraph random_signing(const Graph& g, std::mt19937& rng) {
    std::vector<int> s(g.size());
    for (int& x : s) x = (rng() & 1U) ? 1 : -1;
    return SignedGraph(g, std::move(s));
}

inline std::vector<int> random_switching(int n, std::mt19937& rng) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int& x : d) x = (rng() & 1U) ? 1 : -1;
    return d;
}

/// The C4 signing with exactly one negative edge.
inline SignedGraph c4_one_negative() {
    return SignedGraph::from_triples(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, -1}});
}

}  // namespace fixtures
