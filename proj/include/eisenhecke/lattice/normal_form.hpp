#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eisenhecke/core/matrix.hpp"

namespace eisen {

using EisMatrix = Matrix<EisInt>;
using EisQMatrix = Matrix<EisQ>;

namespace detail {

/// Extended gcd over Z[w]: returns (g, s, t) with s*x + t*y = g.
inline std::tuple<EisInt, EisInt, EisInt> ext_gcd(EisInt x, EisInt y) {
    EisInt s0(1), s1(0), t0(0), t1(1);
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = std::move(y);
        y = std::move(r);
        EisInt s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {x, s0, t0};
}

inline void swap_cols(EisMatrix& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
inline void swap_rows(EisMatrix& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

/// Diagonal of the Smith normal form of an integral matrix over Z[w], as a
/// divisibility chain of canonical associates (zeros last).
inline std::vector<EisInt> smith_diagonal(EisMatrix m) {
    size_t r = m.rows(), c = m.cols();
    size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        // pivot: nonzero entry of smallest norm in the remaining block
        for (;;) {
            size_t pi = r, pj = c;
            Integer best;
            for (size_t i = t; i < r; ++i)
                for (size_t j = t; j < c; ++j)
                    if (!m(i, j).is_zero() && (pi == r || m(i, j).norm() < best)) {
                        best = m(i, j).norm();
                        pi = i;
                        pj = j;
                    }
            if (pi == r) {
                std::vector<EisInt> d;
                for (size_t k = 0; k < t; ++k) d.push_back(normalize_associate(m(k, k)));
                for (size_t k = t; k < std::min(r, c); ++k) d.push_back(EisInt(0));
                return d;
            }
            detail::swap_rows(m, t, pi);
            detail::swap_cols(m, t, pj);
            bool clean = true;
            for (size_t i = t + 1; i < r; ++i) {
                if (m(i, t).is_zero()) continue;
                EisInt q = divmod(m(i, t), m(t, t)).first;
                for (size_t j = t; j < c; ++j) m(i, j) -= q * m(t, j);
                if (!m(i, t).is_zero()) clean = false;
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (m(t, j).is_zero()) continue;
                EisInt q = divmod(m(t, j), m(t, t)).first;
                for (size_t i = t; i < r; ++i) m(i, j) -= q * m(i, t);
                if (!m(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;
            // divisibility: the pivot must divide the rest of the block
            bool divides_all = true;
            for (size_t i = t + 1; i < r && divides_all; ++i)
                for (size_t j = t + 1; j < c; ++j)
                    if (!divides(m(t, t), m(i, j))) {
                        for (size_t k = t; k < c; ++k) m(t, k) += m(i, k);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
    }
    std::vector<EisInt> d;
    for (size_t k = 0; k < std::min(r, c); ++k) d.push_back(normalize_associate(m(k, k)));
    return d;
}

/// Column Hermite form over Z[w]: returns an n x rank matrix whose columns
/// form a basis of the Z[w]-span of the columns of m.
inline EisMatrix column_basis(EisMatrix m) {
    size_t n = m.rows(), k = m.cols();
    size_t col = 0;
    for (size_t row = 0; row < n && col < k; ++row) {
        // gcd-combine all columns >= col into column col at this row
        for (size_t j = col + 1; j < k; ++j) {
            if (m(row, j).is_zero()) continue;
            if (m(row, col).is_zero()) {
                detail::swap_cols(m, col, j);
                continue;
            }
            auto [g, s, t] = detail::ext_gcd(m(row, col), m(row, j));
            EisInt a = *exact_div(m(row, col), g), b = *exact_div(m(row, j), g);
            for (size_t i = 0; i < n; ++i) {
                EisInt x = m(i, col), y = m(i, j);
                m(i, col) = s * x + t * y;
                m(i, j) = a * y - b * x;
            }
        }
        if (!m(row, col).is_zero()) ++col;
    }
    EisMatrix out(n, col);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < col; ++j) out(i, j) = m(i, j);
    return out;
}

/// Canonical Z-Hermite normal form (row style, upper triangular, positive
/// pivots, reduced above) of the Z-span of the rows of m.
inline IntMatrix integer_hnf(IntMatrix m) {
    size_t r = m.rows(), c = m.cols();
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        for (;;) {
            size_t piv = r;
            for (size_t i = row; i < r; ++i)
                if (m(i, col) != 0 && (piv == r || abs(m(i, col)) < abs(m(piv, col)))) piv = i;
            if (piv == r) break;
            for (size_t j = 0; j < c; ++j) std::swap(m(piv, j), m(row, j));
            bool done = true;
            for (size_t i = row + 1; i < r; ++i) {
                if (m(i, col) == 0) continue;
                Integer q = floor_div(m(i, col), m(row, col));
                for (size_t j = col; j < c; ++j) m(i, j) -= q * m(row, j);
                if (m(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (row < r && m(row, col) != 0) {
            if (m(row, col) < 0)
                for (size_t j = col; j < c; ++j) m(row, j) = -m(row, j);
            for (size_t i = 0; i < row; ++i) {
                Integer q = floor_div(m(i, col), m(row, col));
                if (q != 0)
                    for (size_t j = col; j < c; ++j) m(i, j) -= q * m(row, j);
            }
            ++row;
        }
    }
    IntMatrix out(row, c);
    for (size_t i = 0; i < row; ++i)
        for (size_t j = 0; j < c; ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace eisen
