#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace signlab {

/// True iff `c` is a symmetric conference matrix: square, entries in {0,+-1},
/// zero diagonal and C C^T = (n-1) I, all checked in integers.
inline bool verify_conference(const IntMatrix& c) {
    if (!c.square() || c.rows() == 0 || !c.is_symmetric()) return false;
    const std::size_t n = c.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (c(i, i) != 0) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (c(i, j) < -1 || c(i, j) > 1) return false;
    }
    const IntMatrix gram = c * c.transpose();
    const auto scale = static_cast<std::int64_t>(n) - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (gram(i, j) != (i == j ? scale : 0)) return false;
    return true;
}

/// Symmetric conference matrix. Construction validates the defining identity.
class ConferenceMatrix {
public:
    explicit ConferenceMatrix(IntMatrix m) : m_(std::move(m)) {
        if (!verify_conference(m_)) throw std::invalid_argument("ConferenceMatrix: not a symmetric conference matrix");
    }

    std::size_t order() const noexcept { return m_.rows(); }
    const IntMatrix& matrix() const noexcept { return m_; }

    /// First row is +1 off the diagonal.
    bool normalized() const {
        for (std::size_t j = 1; j < order(); ++j)
            if (m_(0, j) != 1) return false;
        return true;
    }

private:
    IntMatrix m_;
};

inline bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Quadratic character on Z/qZ for prime q: 0, +1 (nonzero square) or -1.
inline std::vector<int> quadratic_character(int q) {
    std::vector<int> chi(static_cast<std::size_t>(q), -1);
    chi[0] = 0;
    for (long long x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;
    return chi;
}

inline void require_paley_prime(int q) {
    if (!is_prime(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not prime (prime powers are unsupported)");
    if (q % 4 != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not 1 mod 4");
}

/// Jacobsthal matrix Q_ij = chi(j - i) of order q.
inline IntMatrix jacobsthal_matrix(int q) {
    require_paley_prime(q);
    const auto chi = quadratic_character(q);
    IntMatrix qm(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) qm(i, j) = chi[static_cast<std::size_t>(((j - i) % q + q) % q)];
    return qm;
}

/// Paley conference matrix of order q+1 for a prime q = 1 (mod 4):
/// the Jacobsthal matrix bordered by a row and column of ones.
inline ConferenceMatrix paley_conference(int q) {
    const IntMatrix jac = jacobsthal_matrix(q);
    const auto n = static_cast<std::size_t>(q) + 1;
    IntMatrix c(n, n);
    for (std::size_t j = 1; j < n; ++j) c(0, j) = c(j, 0) = 1;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) c(i, j) = jac(i - 1, j - 1);
    return ConferenceMatrix(std::move(c));
}

/// Switches by D = diag(1, c_01, ..., c_0,n-1) so the first row becomes +1.
inline ConferenceMatrix normalize(const ConferenceMatrix& c) {
    const IntMatrix& m = c.matrix();
    const std::size_t n = c.order();
    std::vector<std::int64_t> d(n, 1);
    for (std::size_t j = 1; j < n; ++j) d[j] = m(0, j);
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = d[i] * m(i, j) * d[j];
    return ConferenceMatrix(std::move(out));
}

/// H_{n-1}: a normalized conference matrix without its first row and column.
inline IntMatrix core_matrix(const ConferenceMatrix& c) {
    if (!c.normalized()) throw std::invalid_argument("core_matrix: conference matrix is not normalized");
    return remove_row_col(c.matrix(), 0);
}

}  // namespace signlab
