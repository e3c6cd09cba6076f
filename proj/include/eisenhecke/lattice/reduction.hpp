#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "eisenhecke/lattice/hermitian_lattice.hpp"

namespace eisen {

using I64Matrix = Matrix<int64_t>;

inline bool is_zero(const int64_t& x) { return x == 0; }

/// The rank-2n Z-lattice underlying a Hermitian lattice, with Z-basis
/// e_1, w*e_1, ..., e_n, w*e_n and bilinear form b(x,y) = Tr <x,y>.
struct TraceLattice {
    I64Matrix gram;   // b on the Z-basis
    I64Matrix omega;  // J: multiplication by w, acting on coordinate columns
};

inline TraceLattice trace_lattice(const Eis64Matrix& g) {
    size_t n = g.rows();
    TraceLattice t{I64Matrix(2 * n, 2 * n), I64Matrix(2 * n, 2 * n)};
    const Eis64 w{0, 1}, wbar{-1, -1};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Eis64& x = g(i, j);
            // <w^a e_i, w^b e_j> = conj(w)^a w^b g_ij
            t.gram(2 * i, 2 * j) = x.trace();
            t.gram(2 * i, 2 * j + 1) = (w * x).trace();
            t.gram(2 * i + 1, 2 * j) = (wbar * x).trace();
            t.gram(2 * i + 1, 2 * j + 1) = x.trace();
        }
    // w(u + v w) = -v + (u - v) w
    for (size_t i = 0; i < n; ++i) {
        t.omega(2 * i, 2 * i + 1) = -1;
        t.omega(2 * i + 1, 2 * i) = 1;
        t.omega(2 * i + 1, 2 * i + 1) = -1;
    }
    return t;
}

/// LLL reduction of a positive definite integral Gram matrix (delta = 0.99).
/// Returns the transform T (columns = reduced basis in old coordinates) and
/// replaces q by T^t q T.
inline I64Matrix lll_reduce(I64Matrix& q) {
    size_t n = q.rows();
    I64Matrix t = I64Matrix::identity(n);
    if (n == 0) return t;
    using LD = long double;
    std::vector<std::vector<LD>> mu(n, std::vector<LD>(n, 0));
    std::vector<LD> bstar(n, 0);
    auto gso_row = [&](size_t k) {
        for (size_t j = 0; j < k; ++j) {
            LD s = static_cast<LD>(q(k, j));
            for (size_t i = 0; i < j; ++i) s -= mu[j][i] * mu[k][i] * bstar[i];
            mu[k][j] = s / bstar[j];
        }
        LD s = static_cast<LD>(q(k, k));
        for (size_t i = 0; i < k; ++i) s -= mu[k][i] * mu[k][i] * bstar[i];
        bstar[k] = s;
    };
    // b_k -= r * b_j
    auto sub = [&](size_t k, size_t j, int64_t r) {
        for (size_t i = 0; i < n; ++i) t(i, k) -= r * t(i, j);
        int64_t qkk = q(k, k) - 2 * r * q(k, j) + r * r * q(j, j);
        for (size_t i = 0; i < n; ++i)
            if (i != k) q(k, i) -= r * q(j, i);
        q(k, k) = qkk;
        for (size_t i = 0; i < n; ++i) q(i, k) = q(k, i);
    };
    auto swap_basis = [&](size_t a, size_t b) {
        for (size_t i = 0; i < n; ++i) std::swap(t(i, a), t(i, b));
        for (size_t i = 0; i < n; ++i) std::swap(q(a, i), q(b, i));
        for (size_t i = 0; i < n; ++i) std::swap(q(i, a), q(i, b));
    };
    gso_row(0);
    size_t k = 1;
    while (k < n) {
        gso_row(k);
        bool changed = false;
        for (size_t j = k; j-- > 0;) {
            LD r = std::round(mu[k][j]);
            if (r == 0) continue;
            sub(k, j, static_cast<int64_t>(r));
            for (size_t i = 0; i < j; ++i) mu[k][i] -= r * mu[j][i];
            mu[k][j] -= r;
            changed = true;
        }
        if (changed) gso_row(k);
        if (bstar[k] < (0.99L - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            swap_basis(k, k - 1);
            k = k > 1 ? k - 1 : 1;
            gso_row(k - 1);
        } else {
            ++k;
        }
    }
    return t;
}

}  // namespace eisen
