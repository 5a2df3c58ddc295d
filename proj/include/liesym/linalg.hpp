#pragma once

// Exact dense linear algebra over any field type with is_zero(), +, -, *, /.

#include <cstddef>
#include <optional>
#include <vector>

#include "liesym/error.hpp"

namespace liesym {

template <class T>
using Vec = std::vector<T>;

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
bool is_zero_vec(const Vec<T>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class T>
struct Echelon {
    Matrix<T> rows;           ///< nonzero rows, reduced, pivots equal to one
    std::vector<int> pivots;  ///< pivot column of each row, increasing

    friend bool operator==(const Echelon& a, const Echelon& b) { return a.rows == b.rows && a.pivots == b.pivots; }
};

/// Reduced row-echelon form of the given rows.
template <class T>
Echelon<T> rref(Matrix<T> m, std::size_t ncols) {
    Echelon<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        T inv = T(1) / m[r][c];
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            T f = m[i][c];
            for (std::size_t j = 0; j < ncols; ++j)
                if (!m[r][j].is_zero()) m[i][j] = m[i][j] - f * m[r][j];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m, std::size_t ncols) {
    return rref(m, ncols).rows.size();
}

/// Basis (as rows) of the null space {x : A x = 0} of an m x n matrix.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a, std::size_t ncols) {
    Echelon<T> e = rref(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix<T> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec<T> x(ncols, T(0));
        x[f] = T(1);
        for (std::size_t i = 0; i < e.rows.size(); ++i) x[static_cast<std::size_t>(e.pivots[i])] = -e.rows[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class T>
Vec<T> mat_vec(const Matrix<T>& m, const Vec<T>& v) {
    Vec<T> out(m.size(), T(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] = out[i] + m[i][j] * v[j];
    return out;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    std::size_t n = a.size();
    std::size_t inner = b.size();
    std::size_t cols = inner == 0 ? 0 : b[0].size();
    Matrix<T> out(n, Vec<T>(cols, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[l][j].is_zero()) out[i][j] = out[i][j] + a[i][l] * b[l][j];
        }
    return out;
}

template <class T>
Matrix<T> identity(std::size_t n) {
    Matrix<T> m(n, Vec<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    if (m.empty()) return {};
    Matrix<T> out(m[0].size(), Vec<T>(m.size(), T(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

/// Inverse of a square matrix; std::nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    std::size_t n = m.size();
    Matrix<T> aug(n, Vec<T>(2 * n, T(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DimensionMismatch("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = T(1);
    }
    Echelon<T> e = rref(aug, 2 * n);
    if (e.rows.size() < n || e.pivots[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
    Matrix<T> out(n, Vec<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = e.rows[i][n + j];
    return out;
}

/// Coordinates of v in the span of echelon rows, or std::nullopt if v is outside it.
template <class T>
std::optional<Vec<T>> coordinates_in(const Echelon<T>& basis, const Vec<T>& v) {
    Vec<T> rest = v;
    Vec<T> coords(basis.rows.size(), T(0));
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        auto p = static_cast<std::size_t>(basis.pivots[i]);
        if (rest[p].is_zero()) continue;
        coords[i] = rest[p];
        for (std::size_t j = 0; j < rest.size(); ++j)
            if (!basis.rows[i][j].is_zero()) rest[j] = rest[j] - coords[i] * basis.rows[i][j];
    }
    if (!is_zero_vec(rest)) return std::nullopt;
    return coords;
}

}  // namespace liesym
