#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "spectra.hpp"

namespace signlab {

inline constexpr int kDefaultMaxFreeEdges = 24;

/// One representative per switching class: the edges of a BFS spanning
/// forest (rooted at the smallest vertex of each component) are fixed to +1
/// and the remaining |E| - n + c edges run over all sign patterns. Bit i of a
/// class index is the sign of the i-th free edge in edge order (1 = -1), so
/// index 0 is the all-positive signing.
class SigningClassSpace {
public:
    explicit SigningClassSpace(Graph g) : graph_(std::move(g)), tree_(graph_.size(), false) {
        const int n = graph_.order();
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::deque<int> queue;
        for (int root = 0; root < n; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            queue.push_back(root);
            while (!queue.empty()) {
                const int u = queue.front();
                queue.pop_front();
                for (int w : graph_.neighbors(u)) {
                    if (seen[w]) continue;
                    seen[w] = true;
                    tree_[static_cast<std::size_t>(graph_.edge_index(u, w))] = true;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t e = 0; e < graph_.size(); ++e)
            if (!tree_[e]) free_.push_back(e);
    }

    const Graph& graph() const noexcept { return graph_; }
    std::size_t free_edge_count() const noexcept { return free_.size(); }
    bool is_tree_edge(std::size_t e) const { return tree_.at(e); }

    /// Number of classes, 2^(free edges). Requires free_edge_count() < 64.
    std::uint64_t size() const {
        if (free_.size() >= 64) throw std::overflow_error("SigningClassSpace: class count does not fit in 64 bits");
        return std::uint64_t{1} << free_.size();
    }

    SignedGraph representative(std::uint64_t index) const {
        std::vector<int> signs(graph_.size(), 1);
        for (std::size_t i = 0; i < free_.size(); ++i)
            if ((index >> i) & 1U) signs[free_[i]] = -1;
        return SignedGraph(graph_, std::move(signs));
    }

    /// Forward iteration over representatives in index order.
    class iterator {
    public:
        using value_type = SignedGraph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const SigningClassSpace* space, std::uint64_t i) : space_(space), i_(i) {}
        SignedGraph operator*() const { return space_->representative(i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++i_;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

    private:
        const SigningClassSpace* space_ = nullptr;
        std::uint64_t i_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    Graph graph_;
    std::vector<bool> tree_;
    std::vector<std::size_t> free_;
};

inline SigningClassSpace enumerate_signing_classes(const Graph& g) { return SigningClassSpace(g); }

struct SearchOptions {
    BoundMode mode = BoundMode::max_degree;
    int max_free_edges = kDefaultMaxFreeEdges;
    unsigned jobs = 1;
};

struct SearchResult {
    double best_rho = std::numeric_limits<double>::infinity();
    SignedGraph best_signing;
    std::uint64_t best_class = 0;
    std::uint64_t classes_examined = 0;
    bool good_found = false;
    double bound_used = 0.0;
};

class SearchGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline SigningClassSpace guarded_space(const Graph& g, int max_free_edges) {
    SigningClassSpace space(g);
    if (static_cast<long long>(space.free_edge_count()) > max_free_edges)
        throw SearchGuardError("search space too large: " + std::to_string(space.free_edge_count()) +
                               " free edges exceeds the limit of " + std::to_string(max_free_edges));
    return space;
}

struct RangeBest {
    double rho = std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;
};

inline RangeBest best_in_range(const SigningClassSpace& space, std::uint64_t lo, std::uint64_t hi) {
    RangeBest best;
    for (std::uint64_t i = lo; i < hi; ++i) {
        const double rho = spectral_radius(signed_adjacency(space.representative(i)));
        if (rho < best.rho) best = {rho, i};
    }
    return best;
}

}  // namespace detail

/// Exhaustive minimum of rho over all switching classes. Ties go to the
/// smallest class index, so the result does not depend on `jobs`.
inline SearchResult min_rho(const Graph& g, const SearchOptions& options = {}) {
    const double bound = ramanujan_bound(bound_degree(g, options.mode));
    const SigningClassSpace space = detail::guarded_space(g, options.max_free_edges);
    const std::uint64_t total = space.size();
    const unsigned jobs = std::max(1U, static_cast<unsigned>(std::min<std::uint64_t>(options.jobs, total)));

    std::vector<detail::RangeBest> partial(jobs);
    if (jobs == 1) {
        partial[0] = detail::best_in_range(space, 0, total);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < jobs; ++t) {
            const std::uint64_t lo = total * t / jobs;
            const std::uint64_t hi = total * (t + 1) / jobs;
            workers.emplace_back([&, t, lo, hi] { partial[t] = detail::best_in_range(space, lo, hi); });
        }
    }

    detail::RangeBest best;
    for (const auto& p : partial)
        if (p.rho < best.rho || (p.rho == best.rho && p.index < best.index)) best = p;

    SearchResult r;
    r.best_rho = best.rho;
    r.best_class = best.index;
    r.best_signing = space.representative(best.index);
    r.classes_examined = total;
    r.bound_used = bound;
    r.good_found = r.best_rho <= bound + kVerdictTolerance;
    return r;
}

/// First class, in index order, whose rho meets the bound for `mode`.
inline std::optional<SignedGraph> find_good_signing(const Graph& g, BoundMode mode,
                                                    int max_free_edges = kDefaultMaxFreeEdges) {
    const double bound = ramanujan_bound(bound_degree(g, mode));
    const SigningClassSpace space = detail::guarded_space(g, max_free_edges);
    for (SignedGraph sg : space)
        if (spectral_radius(signed_adjacency(sg)) <= bound + kVerdictTolerance) return sg;
    return std::nullopt;
}

}  // namespace signlab
