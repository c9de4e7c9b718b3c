#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace toricdisk {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

inline Int rank(QMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    Int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Solves A x = b exactly. Returns nullopt if inconsistent or underdetermined.
inline std::optional<QVector> solve_unique(QMatrix a, QVector b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Rational pv = a[r][c];
        for (std::size_t j = c; j <= cols; ++j) a[r][j] /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;  // inconsistent
    if (r < cols) return std::nullopt;             // underdetermined
    QVector x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols];
    return x;
}

// Exact inverse of a square matrix; nullopt when singular.
inline std::optional<QMatrix> inverse(QMatrix a) {
    const std::size_t n = a.size();
    QMatrix inv(n, QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        Rational pv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= pv;
            inv[c][j] /= pv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace toricdisk
