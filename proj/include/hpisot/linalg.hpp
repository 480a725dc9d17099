#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hpisot/number_field.hpp"

namespace hpisot {

// Exact Gauss-Jordan elimination over a field T (Rational or FieldElement).
// Pivots are the first nonzero entry of each column in row order, so results
// are reproducible.  `zero` and `one` carry the field for FieldElement.

template <class T>
struct Rref {
    std::vector<std::vector<T>> rows;  ///< reduced rows; the first `pivots.size()` are nonzero
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

template <class T>
Rref<T> rref(std::vector<std::vector<T>> m, std::size_t cols, const T& one) {
    Rref<T> out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && is_zero(m[piv][col])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const T inv = one / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || is_zero(m[i][col])) continue;
            const T f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        out.pivots.push_back(col);
        ++rank;
    }
    out.rows = std::move(m);
    return out;
}

/// Basis of {v : m v = 0}, one vector per free column (free entry = 1).
template <class T>
std::vector<std::vector<T>> kernel_basis(std::vector<std::vector<T>> m, std::size_t cols, const T& zero,
                                         const T& one) {
    Rref<T> r = rref(std::move(m), cols, one);
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t p : r.pivots) is_pivot[p] = 1;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, zero);
        v[f] = one;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = zero - r.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<T> x;  ///< a solution with free variables 0, when consistent
};

/// Solves a x = b for a (rows x cols).
template <class T>
LinearSolution<T> solve_linear(const std::vector<std::vector<T>>& a, const std::vector<T>& b, std::size_t cols,
                               const T& zero, const T& one) {
    std::vector<std::vector<T>> aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<T> row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    Rref<T> r = rref(std::move(aug), cols + 1, one);
    LinearSolution<T> out;
    out.consistent = r.pivots.empty() || r.pivots.back() < cols;
    out.rank = r.pivots.size() - (out.consistent ? 0 : 1);
    if (out.consistent) {
        out.x.assign(cols, zero);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) out.x[r.pivots[i]] = r.rows[i][cols];
    }
    return out;
}

/// Rank of a rational matrix by elimination over Q.
inline std::size_t rational_rank(const std::vector<std::vector<Rational>>& m, std::size_t cols) {
    return rref(m, cols, Rational(1)).pivots.size();
}

}  // namespace hpisot
