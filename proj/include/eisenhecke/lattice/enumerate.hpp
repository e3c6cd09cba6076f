#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "eisenhecke/lattice/reduction.hpp"

namespace eisen {

/// Calls f(x) for every x in Z^m with x^t q x <= bound (q positive definite),
/// including x = 0. The check against the bound is exact.
template <class F>
void fincke_pohst(const I64Matrix& q, int64_t bound, F&& f) {
    size_t m = q.rows();
    std::vector<int64_t> x(m, 0);
    if (bound < 0) return;
    if (m == 0) {
        f(x);
        return;
    }
    using LD = long double;
    // Q(x) = sum_i d_i (x_i + sum_{j>i} c_ij x_j)^2
    std::vector<std::vector<LD>> c(m, std::vector<LD>(m, 0));
    std::vector<LD> d(m, 0);
    {
        std::vector<std::vector<LD>> a(m, std::vector<LD>(m, 0));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) a[i][j] = static_cast<LD>(q(i, j));
        for (size_t i = 0; i < m; ++i) {
            d[i] = a[i][i];
            if (d[i] <= 0) throw PreconditionError("lattice", "form is not positive definite");
            for (size_t j = i + 1; j < m; ++j) c[i][j] = a[i][j] / d[i];
            for (size_t k = i + 1; k < m; ++k)
                for (size_t l = k; l < m; ++l) a[k][l] -= c[i][k] * a[i][l];
        }
    }
    const LD eps = 1e-9L * (1 + static_cast<LD>(bound));
    std::vector<LD> T(m, 0), U(m, 0);
    std::vector<int64_t> ub(m, 0);
    auto exact_norm = [&]() {
        __int128 s = 0;
        for (size_t i = 0; i < m; ++i) {
            if (x[i] == 0) continue;
            __int128 r = 0;
            for (size_t j = 0; j < m; ++j) r += static_cast<__int128>(q(i, j)) * x[j];
            s += r * x[i];
        }
        return s;
    };
    auto set_bounds = [&](size_t i) {
        LD z = T[i] / d[i];
        z = z < 0 ? 0 : std::sqrt(z + eps);
        ub[i] = static_cast<int64_t>(std::floor(z - U[i]));
        x[i] = static_cast<int64_t>(std::ceil(-z - U[i])) - 1;
    };
    size_t i = m - 1;
    T[i] = static_cast<LD>(bound) + eps;
    U[i] = 0;
    set_bounds(i);
    for (;;) {
        ++x[i];
        if (x[i] > ub[i]) {
            if (++i == m) return;
            continue;
        }
        if (i > 0) {
            LD y = x[i] + U[i];
            T[i - 1] = T[i] - d[i] * y * y;
            --i;
            LD u = 0;
            for (size_t j = i + 1; j < m; ++j) u += c[i][j] * static_cast<LD>(x[j]);
            U[i] = u;
            set_bounds(i);
        } else if (exact_norm() <= bound) {
            f(x);
        }
    }
}

/// Vectors of a positive definite integral Hermitian lattice, stored with
/// Eisenstein coordinates relative to the lattice basis.
struct VectorList {
    size_t rank = 0;
    std::vector<int64_t> coords;  // a_1, b_1, ..., a_n, b_n per vector
    std::vector<int64_t> norms;

    size_t size() const { return norms.size(); }
    const int64_t* at(size_t k) const { return coords.data() + k * 2 * rank; }
    Eis64 coord(size_t k, size_t i) const { return {at(k)[2 * i], at(k)[2 * i + 1]}; }
};

/// Hermitian norm <x,x> of coordinates x relative to Gram g.
inline int64_t hermitian_norm(const Eis64Matrix& g, const int64_t* x) {
    size_t n = g.rows();
    Eis64 s{0, 0};
    for (size_t i = 0; i < n; ++i) {
        Eis64 xi{x[2 * i], x[2 * i + 1]};
        if (xi.is_zero()) continue;
        Eis64 r{0, 0};
        for (size_t j = 0; j < n; ++j) r += g(i, j) * Eis64{x[2 * j], x[2 * j + 1]};
        s += xi.conj() * r;
    }
    return s.a;
}

/// All vectors with <x,x> <= bound (zero vector included when include_zero).
inline VectorList enumerate_vectors(const Eis64Matrix& g, int64_t bound, bool include_zero = true) {
    if (bound < 0) throw PreconditionError("lattice", "negative enumeration bound");
    size_t n = g.rows();
    VectorList out;
    out.rank = n;
    TraceLattice tl = trace_lattice(g);
    I64Matrix q = tl.gram;
    I64Matrix t = lll_reduce(q);
    std::vector<int64_t> orig(2 * n);
    fincke_pohst(q, 2 * bound, [&](const std::vector<int64_t>& y) {
        bool zero = true;
        for (size_t i = 0; i < 2 * n; ++i) {
            int64_t s = 0;
            for (size_t j = 0; j < 2 * n; ++j) s += t(i, j) * y[j];
            orig[i] = s;
            if (s) zero = false;
        }
        if (zero && !include_zero) return;
        out.coords.insert(out.coords.end(), orig.begin(), orig.end());
        out.norms.push_back(hermitian_norm(g, orig.data()));
    });
    return out;
}

inline VectorList enumerate_vectors(const HermitianLattice& L, const Rational& bound, bool include_zero = true) {
    if (bound < 0) throw PreconditionError("lattice", "negative enumeration bound");
    if (!L.is_integral()) throw PreconditionError("lattice", "enumeration needs an integral lattice");
    if (!L.is_positive_definite()) throw PreconditionError("lattice", "enumeration needs a definite lattice");
    return enumerate_vectors(L.gram64(), to_i64(floor_rational(bound)), include_zero);
}

/// Number of vectors of each norm up to bound (norm 0 counts the zero vector).
inline std::map<int64_t, uint64_t> norm_counts(const Eis64Matrix& g, int64_t bound) {
    std::map<int64_t, uint64_t> counts;
    for (int64_t k = 0; k <= bound; ++k) counts[k] = 0;
    size_t n = g.rows();
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    TraceLattice tl = trace_lattice(g);
    I64Matrix q = tl.gram;
    lll_reduce(q);
    fincke_pohst(q, 2 * bound, [&](const std::vector<int64_t>& y) {
        __int128 s = 0;
        for (size_t i = 0; i < 2 * n; ++i) {
            if (!y[i]) continue;
            __int128 r = 0;
            for (size_t j = 0; j < 2 * n; ++j) r += static_cast<__int128>(q(i, j)) * y[j];
            s += r * y[i];
        }
        ++counts[static_cast<int64_t>(s / 2)];
    });
    return counts;
}

}  // namespace eisen
