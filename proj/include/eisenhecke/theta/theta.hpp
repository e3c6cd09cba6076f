#pragma once

#include <string>
#include <vector>

#include "eisenhecke/lattice/enumerate.hpp"
#include "eisenhecke/neighbour/genus.hpp"

namespace eisen {

/// Degree-1 theta series sum_n r(n) q^n truncated at precision (a norm).
template <class T>
struct BasicThetaSeries {
    int64_t precision = 0;
    std::vector<T> coefficients;  // r(0), ..., r(precision)

    const T& operator[](size_t n) const { return coefficients.at(n); }
    friend bool operator==(const BasicThetaSeries& a, const BasicThetaSeries& b) {
        return a.precision == b.precision && a.coefficients == b.coefficients;
    }
};

using ThetaSeries = BasicThetaSeries<Integer>;
using RationalThetaSeries = BasicThetaSeries<Rational>;

inline ThetaSeries theta_degree1(const HermitianLattice& L, int64_t precision) {
    if (precision < 0) throw PreconditionError("theta", "negative precision");
    ThetaSeries t;
    t.precision = precision;
    t.coefficients.assign(static_cast<size_t>(precision) + 1, 0);
    if (L.rank() == 0) {
        t.coefficients[0] = 1;
        return t;
    }
    if (!L.is_integral()) throw PreconditionError("theta", "lattice is not integral");
    if (!L.is_positive_definite()) throw PreconditionError("theta", "lattice is not positive definite");
    for (const auto& [n, c] : norm_counts(L.gram64(), precision))
        t.coefficients[static_cast<size_t>(n)] = Integer(static_cast<unsigned long>(c));
    return t;
}

/// Coefficients of the product of two series (theta of an orthogonal sum).
template <class T>
BasicThetaSeries<T> convolve(const BasicThetaSeries<T>& a, const BasicThetaSeries<T>& b) {
    BasicThetaSeries<T> c;
    c.precision = std::min(a.precision, b.precision);
    c.coefficients.assign(static_cast<size_t>(c.precision) + 1, T(0));
    for (size_t i = 0; i <= static_cast<size_t>(c.precision); ++i)
        for (size_t j = 0; i + j <= static_cast<size_t>(c.precision); ++j) c.coefficients[i + j] += a[i] * b[j];
    return c;
}

/// sum_j (x_j / |Aut(L_j)|) theta(L_j).
inline RationalThetaSeries theta_of_combination(const std::vector<Rational>& weights, GenusEnumeration& genus,
                                                int64_t precision) {
    if (weights.size() != genus.size())
        throw PreconditionError("theta", "weight vector has length " + std::to_string(weights.size()) + ", genus has " +
                                             std::to_string(genus.size()) + " classes");
    if (genus.aut_orders.size() < genus.size()) ensure_automorphisms(genus);
    RationalThetaSeries out;
    out.precision = precision;
    out.coefficients.assign(static_cast<size_t>(precision) + 1, Rational(0));
    for (size_t j = 0; j < genus.size(); ++j) {
        if (weights[j] == 0) continue;
        ThetaSeries t = theta_degree1(genus.representatives[j], precision);
        Rational w = weights[j] / Rational(genus.aut_orders[j]);
        for (size_t n = 0; n < out.coefficients.size(); ++n) out.coefficients[n] += w * Rational(t[n]);
    }
    return out;
}

template <class T>
nlohmann::json to_json(const BasicThetaSeries<T>& t) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : t.coefficients) c.push_back(x.get_str());
    return {{"precision", t.precision}, {"coefficients", c}};
}

}  // namespace eisen
