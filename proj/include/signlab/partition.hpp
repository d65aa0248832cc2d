#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"
#include "spectra.hpp"

namespace signlab {

/// Ordered cells C_1..C_k that are disjoint, nonempty and cover 0..n-1.
class Partition {
public:
    Partition() = default;

    Partition(int n, std::vector<std::vector<int>> cells) : n_(n), cells_(std::move(cells)) {
        cell_of_.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t c = 0; c < cells_.size(); ++c) {
            if (cells_[c].empty()) throw std::invalid_argument("Partition: cell " + std::to_string(c) + " is empty");
            for (int v : cells_[c]) {
                if (v < 0 || v >= n) throw std::out_of_range("Partition: vertex " + std::to_string(v) + " out of range");
                if (cell_of_[v] >= 0)
                    throw std::invalid_argument("Partition: vertex " + std::to_string(v) + " lies in two cells");
                cell_of_[v] = static_cast<int>(c);
            }
        }
        for (int v = 0; v < n; ++v)
            if (cell_of_[v] < 0) throw std::invalid_argument("Partition: vertex " + std::to_string(v) + " is in no cell");
    }

    /// Every vertex its own cell.
    static Partition discrete(int n) {
        std::vector<std::vector<int>> cells;
        for (int v = 0; v < n; ++v) cells.push_back({v});
        return Partition(n, std::move(cells));
    }

    /// All vertices in one cell.
    static Partition trivial(int n) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[v] = v;
        return Partition(n, {std::move(all)});
    }

    /// Cells {b*x, ..., b*x + b - 1} for x = 0..n-1; the fibres of a blow-up
    /// indexed as b*x + i (lexicographic products and lifts).
    static Partition blocks(int n, int b) {
        std::vector<std::vector<int>> cells(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            for (int i = 0; i < b; ++i) cells[x].push_back(b * x + i);
        return Partition(n * b, std::move(cells));
    }

    int vertex_count() const noexcept { return n_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }
    const std::vector<int>& cell(std::size_t i) const { return cells_.at(i); }
    int cell_of(int v) const { return cell_of_.at(static_cast<std::size_t>(v)); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_of_;
};

/// d(u,S) = |N+(u) & S| - |N-(u) & S|.
inline int signed_degree(const SignedGraph& sg, int u, std::span<const int> s) {
    const int n = sg.order();
    if (u < 0 || u >= n) throw std::out_of_range("signed_degree: vertex " + std::to_string(u) + " out of range");
    int d = 0;
    for (int v : s) {
        if (v < 0 || v >= n) throw std::out_of_range("signed_degree: vertex " + std::to_string(v) + " out of range");
        d += sg.sign(u, v);
    }
    return d;
}

struct EquitabilityWitness {
    std::size_t cell_i = 0;
    std::size_t cell_j = 0;
    int u = 0;
    int u_prime = 0;
    int degree_u = 0;
    int degree_u_prime = 0;
};

struct EquitabilityResult {
    bool equitable = false;
    std::optional<EquitabilityWitness> witness;
    explicit operator bool() const noexcept { return equitable; }
};

namespace detail {

/// Row u of the vertex-by-cell signed-degree table.
inline std::vector<std::vector<int>> cell_degrees(const SignedGraph& sg, const Partition& p) {
    std::vector<std::vector<int>> deg(static_cast<std::size_t>(sg.order()), std::vector<int>(p.size(), 0));
    const auto& edges = sg.graph().edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const int s = sg.signs()[e];
        deg[edges[e].u][p.cell_of(edges[e].v)] += s;
        deg[edges[e].v][p.cell_of(edges[e].u)] += s;
    }
    return deg;
}

inline void require_same_vertex_set(const SignedGraph& sg, const Partition& p, const char* where) {
    if (p.vertex_count() != sg.order())
        throw std::invalid_argument(std::string(where) + ": partition covers " + std::to_string(p.vertex_count()) +
                                    " vertices, graph has " + std::to_string(sg.order()));
}

}  // namespace detail

/// Equitable iff d(u, C_j) is constant over u in C_i for every pair of cells.
inline EquitabilityResult is_equitable(const SignedGraph& sg, const Partition& p) {
    detail::require_same_vertex_set(sg, p, "is_equitable");
    const auto deg = detail::cell_degrees(sg, p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& cell = p.cell(i);
        const int first = cell.front();
        for (int u : cell)
            for (std::size_t j = 0; j < p.size(); ++j)
                if (deg[u][j] != deg[first][j])
                    return {false, EquitabilityWitness{i, j, first, u, deg[first][j], deg[u][j]}};
    }
    return {true, std::nullopt};
}

/// n x k 0/1 matrix, P_vc = 1 iff v lies in cell c.
inline IntMatrix characteristic_matrix(const Partition& p) {
    IntMatrix m(static_cast<std::size_t>(p.vertex_count()), p.size());
    for (int v = 0; v < p.vertex_count(); ++v) m(v, p.cell_of(v)) = 1;
    return m;
}

struct QuotientMatrix {
    IntMatrix b;
    Partition partition;
};

/// B_ij = d(u, C_j) for any u in C_i. The partition must be equitable.
inline QuotientMatrix quotient_matrix(const SignedGraph& sg, const Partition& p) {
    const auto check = is_equitable(sg, p);
    if (!check) {
        const auto& w = *check.witness;
        throw std::invalid_argument("quotient_matrix: partition is not equitable (cells " + std::to_string(w.cell_i) +
                                    "->" + std::to_string(w.cell_j) + ": d(" + std::to_string(w.u) + ")=" +
                                    std::to_string(w.degree_u) + " but d(" + std::to_string(w.u_prime) +
                                    ")=" + std::to_string(w.degree_u_prime) + ")");
    }
    const auto deg = detail::cell_degrees(sg, p);
    IntMatrix b(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) b(i, j) = deg[p.cell(i).front()][j];
    return {std::move(b), p};
}

/// Exact check of (A^sigma)^r P = P B^r; r = 1 is the defining identity.
inline bool verify_quotient_identity(const SignedGraph& sg, const Partition& p, const IntMatrix& b, unsigned r = 1) {
    if (p.vertex_count() != sg.order() || b.rows() != p.size() || b.cols() != p.size()) return false;
    const IntMatrix pm = characteristic_matrix(p);
    return power(signed_adjacency(sg), r) * pm == pm * power(b, r);
}

/// Spectrum of B. With D = diag(|C_i|), D B = P^T A P is symmetric, so B is
/// similar to the symmetric D^{1/2} B D^{-1/2} and Jacobi applies.
inline std::vector<double> quotient_spectrum(const QuotientMatrix& q) {
    const std::size_t k = q.b.rows();
    RealMatrix s(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const double ratio = static_cast<double>(q.partition.cell(i).size()) / static_cast<double>(q.partition.cell(j).size());
            s(i, j) = static_cast<double>(q.b(i, j)) * std::sqrt(ratio);
        }
    // Symmetric up to rounding in the square roots.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
    return eigenvalues_symmetric(std::move(s));
}

}  // namespace signlab
