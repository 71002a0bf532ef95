#ifndef PADELOG_LINALG_HPP
#define PADELOG_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "padelog/rational.hpp"

namespace padelog {

using Matrix = std::vector<std::vector<Rat>>;

inline Matrix make_matrix(size_t rows, size_t cols) {
    return Matrix(rows, std::vector<Rat>(cols, Rat(0)));
}

namespace detail {

// Row-reduce in place; returns pivot columns. Exact arithmetic, first nonzero
// pivot in column order.
inline std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline size_t rank(Matrix m) { return detail::rref(m).size(); }

inline Rat determinant(Matrix m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

/// Basis of the right kernel, one vector per free column.
inline std::vector<std::vector<Rat>> kernel_basis(Matrix m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace padelog

#endif
