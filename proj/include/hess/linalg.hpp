#pragma once
// Small dense exact linear algebra over Q.

#include "hess/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hess {

using QMatrix = std::vector<std::vector<Q>>;
using QVector = std::vector<Q>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Q inv = Q(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

inline Q det(QMatrix m) {
    std::size_t n = m.size();
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

inline QMatrix inverse(const QMatrix& a) {
    std::size_t n = a.size();
    QMatrix m(n, QVector(2 * n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    auto piv = rref(m);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    QMatrix r(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = m[i][n + j];
    return r;
}

template <class Int>
QMatrix to_qmatrix(const std::vector<std::vector<Int>>& a) {
    QMatrix m;
    for (const auto& row : a) {
        QVector r;
        for (const auto& x : row) r.emplace_back(x);
        m.push_back(std::move(r));
    }
    return m;
}

/**
 * Solution set of A x = b.
 *
 * `particular` is one solution, `kernel` a basis of the null space.
 */
struct LinearSolution {
    bool consistent = false;
    QVector particular;
    std::vector<QVector> kernel;
};

inline LinearSolution solve_linear(const QMatrix& a, const QVector& b) {
    LinearSolution s;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    QMatrix m(rows, QVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    auto piv = rref(m);
    if (!piv.empty() && piv.back() == cols) return s;
    s.consistent = true;
    s.particular.assign(cols, Q(0));
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        s.particular[piv[r]] = m[r][cols];
        is_pivot[piv[r]] = true;
    }
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector k(cols, Q(0));
        k[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) k[piv[r]] = -m[r][f];
        s.kernel.push_back(std::move(k));
    }
    return s;
}

}  // namespace hess
