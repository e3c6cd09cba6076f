#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eisenhecke/core/eisenstein.hpp"
#include "eisenhecke/core/quadratic.hpp"

namespace eisen {

// field helpers used by the generic elimination routines
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const EisQ& x) { return x.a == 0 && x.b == 0; }
inline bool is_zero(const EisInt& x) { return x.is_zero(); }
inline bool is_zero(const QuadExtElem& x) { return x.is_zero(); }
inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }
inline EisQ field_inverse(const EisQ& x) { return inverse(x); }
inline QuadExtElem field_inverse(const QuadExtElem& x) { return x.inverse(); }

/// Dense row-major matrix over a single ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(size_t rows, size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw PreconditionError("core-arith", "matrix data has wrong length");
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Matrix m(r, c);
        for (size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw PreconditionError("core-arith", "ragged matrix rows");
            for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
    std::vector<T> col(size_t j) const {
        std::vector<T> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    const std::vector<T>& data() const { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
        using U = decltype(f(std::declval<T>()));
        std::vector<U> d;
        d.reserve(data_.size());
        for (const auto& x : data_) d.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(d));
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw PreconditionError("core-arith", "matrix product shape mismatch");
        Matrix z(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const T& a = x(i, k);
                if (is_zero(a)) continue;
                for (size_t j = 0; j < y.cols_; ++j) z(i, j) += a * y(k, j);
            }
        return z;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw PreconditionError("core-arith", "matrix sum shape mismatch");
        Matrix z = x;
        for (size_t i = 0; i < z.data_.size(); ++i) z.data_[i] += y.data_[i];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw PreconditionError("core-arith", "matrix sum shape mismatch");
        Matrix z = x;
        for (size_t i = 0; i < z.data_.size(); ++i) z.data_[i] -= y.data_[i];
        return z;
    }
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix z = x;
        for (auto& e : z.data_) e = s * e;
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw PreconditionError("core-arith", "vector length mismatch");
        std::vector<T> out(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    return m.map([](const Integer& x) { return Rational(x); });
}

/// Reduced row echelon form in place over a field; returns pivot columns.
template <class T>
std::vector<size_t> rref(Matrix<T>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        T inv = field_inverse(m(r, c));
        for (size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
size_t rank(Matrix<T> m) {
    return rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<std::vector<T>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m x = b; nullopt when inconsistent. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
    if (b.size() != m.rows()) throw PreconditionError("core-arith", "right-hand side length mismatch");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<T> x(m.cols(), T(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.square()) throw PreconditionError("core-arith", "inverse of a non-square matrix");
    size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw PreconditionError("core-arith", "matrix is singular");
    Matrix<T> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class T>
T determinant(Matrix<T> m) {
    if (!m.square()) throw PreconditionError("core-arith", "determinant of a non-square matrix");
    size_t n = m.rows();
    T det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        T inv = field_inverse(m(c, c));
        for (size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
inline Integer determinant(IntMatrix m) {
    size_t n = m.rows();
    if (!m.square()) throw PreconditionError("core-arith", "determinant of a non-square matrix");
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Conjugate transpose of a matrix over Q(w).
template <class T>
Matrix<Eisenstein<T>> adjoint(const Matrix<Eisenstein<T>>& m) {
    Matrix<Eisenstein<T>> t(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
    return t;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            using eisen::to_string;
            s += to_string(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace eisen
