#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"

namespace signlab {

/// Additive slack on every spectral bound; rho == bound counts as good.
inline constexpr double kVerdictTolerance = 1e-9;

/// Jacobi stops once the off-diagonal Frobenius norm falls below this
/// multiple of the input's Frobenius norm.
inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 64;

class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double off_diagonal_norm(const RealMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

inline double frobenius_norm(const RealMatrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

}  // namespace detail

/// Eigenvalues of a symmetric matrix in ascending order, by cyclic Jacobi
/// rotations on a private copy.
inline std::vector<double> eigenvalues_symmetric(RealMatrix a) {
    if (!a.square()) throw std::invalid_argument("eigenvalues_symmetric: matrix is not square");
    if (!a.is_symmetric()) throw std::invalid_argument("eigenvalues_symmetric: matrix is not symmetric");
    const std::size_t n = a.rows();

    const double threshold = kJacobiRelativeTolerance * detail::frobenius_norm(a);
    int sweep = 0;
    while (detail::off_diagonal_norm(a) > threshold) {
        if (sweep++ == kJacobiMaxSweeps)
            throw EigensolverError("eigenvalues_symmetric: no convergence after " +
                                   std::to_string(kJacobiMaxSweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation zeroing a(p,q): t = tan(theta), the smaller root.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

inline std::vector<double> eigenvalues_symmetric(const IntMatrix& a) {
    return eigenvalues_symmetric(a.cast<double>());
}

inline double spectral_radius(std::span<const double> sorted_eigenvalues) {
    if (sorted_eigenvalues.empty()) return 0.0;
    return std::max(std::abs(sorted_eigenvalues.front()), std::abs(sorted_eigenvalues.back()));
}

inline double spectral_radius(const RealMatrix& a) { return spectral_radius(eigenvalues_symmetric(a)); }
inline double spectral_radius(const IntMatrix& a) { return spectral_radius(eigenvalues_symmetric(a)); }

/// Greedy matching of sorted lists: true when every value of `sub` pairs with
/// a distinct value of `super` within `tol`.
inline bool spectrum_included(std::vector<double> sub, std::vector<double> super, double tol) {
    std::sort(sub.begin(), sub.end());
    std::sort(super.begin(), super.end());
    std::size_t j = 0;
    for (double x : sub) {
        while (j < super.size() && super[j] < x - tol) ++j;
        if (j == super.size() || super[j] > x + tol) return false;
        ++j;
    }
    return true;
}

inline bool spectra_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    return a.size() == b.size() && spectrum_included(a, b, tol);
}

// ---------------------------------------------------------------------------
// Good-signing verdicts

/// Which degree feeds the bound 2*sqrt(deg - 1): the common degree of a
/// regular graph, or the maximum degree of any graph.
enum class BoundMode { regular, max_degree };

inline const char* to_string(BoundMode m) { return m == BoundMode::regular ? "regular" : "maxdeg"; }

inline BoundMode parse_bound_mode(const std::string& s) {
    if (s == "regular") return BoundMode::regular;
    if (s == "maxdeg") return BoundMode::max_degree;
    throw std::invalid_argument("unknown mode '" + s + "' (expected regular or maxdeg)");
}

enum class Verdict { good, not_good };

inline const char* to_string(Verdict v) { return v == Verdict::good ? "good" : "not_good"; }

struct SpectralReport {
    std::vector<double> eigenvalues;  // ascending
    double rho = 0.0;
    int degree = 0;
    BoundMode mode = BoundMode::regular;
    double bound = 0.0;
    Verdict verdict = Verdict::not_good;
    double tolerance = kVerdictTolerance;
};

/// Degree the bound is taken from; throws when the mode does not apply.
inline int bound_degree(const Graph& g, BoundMode mode) {
    if (mode == BoundMode::regular) {
        const auto d = g.regular_degree();
        if (!d) throw std::invalid_argument("regular mode requires a regular graph");
        if (*d <= 1) throw std::invalid_argument("regular mode requires degree d > 1, got d = " + std::to_string(*d));
        return *d;
    }
    const int delta = g.max_degree();
    if (delta <= 1) throw std::invalid_argument("maxdeg mode requires max degree > 1, got " + std::to_string(delta));
    return delta;
}

inline double ramanujan_bound(int degree) { return 2.0 * std::sqrt(static_cast<double>(degree - 1)); }

inline SpectralReport check_good_signing(const SignedGraph& sg, BoundMode mode) {
    SpectralReport r;
    r.mode = mode;
    r.degree = bound_degree(sg.graph(), mode);
    r.bound = ramanujan_bound(r.degree);
    r.eigenvalues = eigenvalues_symmetric(signed_adjacency(sg));
    r.rho = spectral_radius(r.eigenvalues);
    r.verdict = r.rho <= r.bound + r.tolerance ? Verdict::good : Verdict::not_good;
    return r;
}

struct RamanujanReport {
    std::vector<double> eigenvalues;   // full spectrum, ascending
    std::vector<double> nontrivial;    // with d (and -d when bipartite) removed
    int degree = 0;
    bool bipartite = false;
    double bound = 0.0;
    bool ramanujan = false;
};

/// Tests the nontrivial spectrum of a connected d-regular graph against
/// [-2 sqrt(d-1), 2 sqrt(d-1)]. One occurrence of the eigenvalue nearest d is
/// removed, and likewise nearest -d for bipartite graphs.
inline RamanujanReport check_ramanujan(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d) throw std::invalid_argument("check_ramanujan: graph is not regular");
    if (*d <= 1) throw std::invalid_argument("check_ramanujan: requires degree d > 1");
    if (!is_connected(g)) throw std::invalid_argument("check_ramanujan: graph is disconnected");

    RamanujanReport r;
    r.degree = *d;
    r.bound = ramanujan_bound(*d);
    r.bipartite = is_bipartite(g).has_value();
    r.eigenvalues = eigenvalues_symmetric(adjacency_matrix(g));
    r.nontrivial = r.eigenvalues;

    auto remove_nearest = [&](double target) {
        auto it = std::min_element(r.nontrivial.begin(), r.nontrivial.end(),
                                   [&](double x, double y) { return std::abs(x - target) < std::abs(y - target); });
        r.nontrivial.erase(it);
    };
    remove_nearest(static_cast<double>(*d));
    if (r.bipartite) remove_nearest(-static_cast<double>(*d));

    r.ramanujan = std::all_of(r.nontrivial.begin(), r.nontrivial.end(),
                              [&](double x) { return std::abs(x) <= r.bound + kVerdictTolerance; });
    return r;
}

}  // namespace signlab
