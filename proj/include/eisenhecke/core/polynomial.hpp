#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eisenhecke/core/matrix.hpp"

namespace eisen {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static Polynomial monomial(size_t k, const Rational& a = 1) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }
    static Polynomial x_minus(const Rational& r) { return Polynomial({-r, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + V(c_[k]);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
        for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
        for (size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()), Rational(0));
        for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
        for (size_t i = 0; i < q.c_.size(); ++i) c[i] -= q.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> c(p.c_.size() + q.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw PreconditionError("core-arith", "polynomial division by zero");
        std::vector<Rational> r = c_;
        int dd = d.degree();
        if (degree() < dd) return {Polynomial(), *this};
        std::vector<Rational> q(static_cast<size_t>(degree() - dd + 1), Rational(0));
        Rational inv = Rational(1) / d.lead();
        for (int k = degree() - dd; k >= 0; --k) {
            Rational f = r[static_cast<size_t>(k + dd)] * inv;
            q[static_cast<size_t>(k)] = f;
            if (f == 0) continue;
            for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(k + j)] -= f * d.c_[static_cast<size_t>(j)];
        }
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t k = c_.size(); k-- > 0;) {
            const Rational& a = c_[k];
            if (a == 0) continue;
            Rational m = abs(a);
            s += (a < 0) ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
            if (k == 0 || m != 1) s += m.get_str();
            if (k > 0) s += (k == 0 || m != 1 ? "*" : "") + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Characteristic polynomial det(xI - A) by reduction to Hessenberg form.
inline Polynomial charpoly(const RatMatrix& a_in) {
    if (!a_in.square()) throw PreconditionError("core-arith", "characteristic polynomial of a non-square matrix");
    RatMatrix h = a_in;
    size_t n = h.rows();
    for (size_t m = 1; m + 1 < n; ++m) {
        size_t piv = m;
        while (piv < n && h(piv, m - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            for (size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
            for (size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
        }
        Rational inv = Rational(1) / h(m, m - 1);
        for (size_t i = m + 1; i < n; ++i) {
            if (h(i, m - 1) == 0) continue;
            Rational f = h(i, m - 1) * inv;
            for (size_t j = 0; j < n; ++j) h(i, j) -= f * h(m, j);
            for (size_t k = 0; k < n; ++k) h(k, m) += f * h(k, i);
        }
    }
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial({Rational(1)});
    for (size_t m = 1; m <= n; ++m) {
        p[m] = Polynomial::x_minus(h(m - 1, m - 1)) * p[m - 1];
        Rational prod = 1;
        for (size_t i = m - 1; i-- > 0;) {
            prod *= h(i + 1, i);
            if (prod == 0) break;
            p[m] = p[m] - Polynomial({prod * h(i, m - 1)}) * p[i];
        }
    }
    return p[n];
}

inline Polynomial charpoly(const IntMatrix& a) { return charpoly(to_rational(a)); }

}  // namespace eisen
