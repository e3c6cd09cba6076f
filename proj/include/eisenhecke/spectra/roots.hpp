#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "eisenhecke/core/polynomial.hpp"
#include "eisenhecke/core/quadratic.hpp"

namespace eisen {

/// Roots of a rational polynomial whose irreducible factors have degree <= 2.
struct PolynomialRoots {
    std::vector<std::pair<QuadExtElem, int>> roots;  // root, multiplicity
};

namespace detail {

/// Integer coefficients of a monic polynomial with integral coefficients.
inline std::vector<Integer> integer_coefficients(const Polynomial& p) {
    if (p.lead() != 1) throw PreconditionError("spectra", "expected a monic polynomial");
    std::vector<Integer> c;
    for (const auto& a : p.coeffs()) {
        if (a.get_den() != 1) throw PreconditionError("spectra", "expected integral coefficients");
        c.push_back(a.get_num());
    }
    return c;
}

/// Candidates x in [-B, B] with p(x) = 0 mod 2^61 - 1.
inline std::vector<int64_t> sieve_roots(const std::vector<Integer>& c, int64_t B) {
    constexpr uint64_t M = (uint64_t{1} << 61) - 1;
    std::vector<uint64_t> cm;
    Integer Mz;
    mpz_set_ui(Mz.get_mpz_t(), 1);
    Mz <<= 61;
    Mz -= 1;
    for (const auto& a : c) cm.push_back(mpz_get_ui(Integer(mod(a, Mz)).get_mpz_t()));
    auto mulmod = [](uint64_t a, uint64_t b) {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        uint64_t lo = static_cast<uint64_t>(t & M), hi = static_cast<uint64_t>(t >> 61);
        uint64_t s = lo + hi;
        return s >= M ? s - M : s;
    };
    std::vector<int64_t> out;
    for (int64_t x = -B; x <= B; ++x) {
        uint64_t xm = x >= 0 ? static_cast<uint64_t>(x) : M - static_cast<uint64_t>(-x);
        uint64_t acc = 0;
        for (size_t k = cm.size(); k-- > 0;) {
            acc = mulmod(acc, xm) + cm[k];
            if (acc >= M) acc -= M;
        }
        if (acc == 0) out.push_back(x);
    }
    return out;
}

inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> ds{1};
    if (n == 0) return ds;
    for (const auto& [p, e] : factorize(abs(n))) {
        size_t m = ds.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < m; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Roots of an irreducible monic x^2 + b x + c.
inline std::pair<QuadExtElem, QuadExtElem> quadratic_roots(const Integer& b, const Integer& c) {
    Integer disc = b * b - 4 * c;
    // disc = f^2 D with D squarefree
    Integer D = disc < 0 ? Integer(-1) : Integer(1), f = 1;
    for (const auto& [p, e] : factorize(abs(disc))) {
        for (int k = 0; k < e / 2; ++k) f *= p;
        if (e % 2) D *= p;
    }
    Rational a(-b, 2), s(f, 2);
    a.canonicalize();
    s.canonicalize();
    return {QuadExtElem(a, s, D), QuadExtElem(a, -s, D)};
}

}  // namespace detail

/// Roots of a monic integral polynomial all of whose real roots lie in [-B, B].
///
/// Integer roots are found by a residue sieve over [-B, B] followed by exact
/// division; the rest is split into monic integral quadratics x^2 + bx + c,
/// with c running over divisors of the constant term and 1 + b + c over
/// divisors of the value at 1.
inline PolynomialRoots roots_of(Polynomial p, const Integer& bound) {
    if (bound > Integer(1) << 40) throw UnsupportedCaseError("spectra", "root bound too large for the sieve");
    PolynomialRoots out;
    int64_t B = to_i64(bound);
    auto candidates = detail::sieve_roots(detail::integer_coefficients(p), B);
    for (int64_t x : candidates) {
        int mult = 0;
        for (;;) {
            auto [q, r] = p.divmod(Polynomial::x_minus(Rational(x)));
            if (!r.is_zero()) break;
            p = q;
            ++mult;
        }
        if (mult) out.roots.emplace_back(QuadExtElem(Integer(x)), mult);
    }
    std::map<std::pair<Integer, Integer>, int> quads;
    while (p.degree() > 0) {
        if (p.degree() == 1) throw InvariantViolation("spectra", "linear factor missed by the root sieve");
        auto c = detail::integer_coefficients(p);
        bool found = false;
        if (p.degree() == 2) {
            quads[{c[1], c[0]}]++;
            p = Polynomial({Rational(1)});
            break;
        }
        Integer at1 = 0;
        for (const auto& a : c) at1 += a;
        Integer bsq = bound * bound;
        for (const Integer& d0 : detail::divisors(c[0])) {
            if (d0 > bsq) break;
            for (int sc : {1, -1}) {
                Integer cc = sc * d0;
                for (const Integer& d1 : detail::divisors(at1)) {
                    for (int s1 : {1, -1}) {
                        Integer b = s1 * d1 - 1 - cc;
                        if (abs(b) > 2 * bound) continue;
                        Polynomial f({Rational(cc), Rational(b), Rational(1)});
                        auto [q, r] = p.divmod(f);
                        if (!r.is_zero()) continue;
                        p = q;
                        quads[{b, cc}]++;
                        found = true;
                        break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw UnsupportedCaseError("spectra", "characteristic polynomial has an irreducible factor of degree >= 3: " +
                                                      p.str());
    }
    for (const auto& [bc, m] : quads) {
        auto [r1, r2] = detail::quadratic_roots(bc.first, bc.second);
        out.roots.emplace_back(r1, m);
        out.roots.emplace_back(r2, m);
    }
    return out;
}

}  // namespace eisen
