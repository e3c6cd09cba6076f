#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eisenhecke/core/errors.hpp"

namespace eisen {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("core-arith", "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer ipow(long base, unsigned long exp) { return ipow(Integer(base), exp); }

/// base^exp for a possibly negative exponent.
inline Rational rpow(const Rational& base, long exp) {
    if (exp >= 0) {
        Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                   ipow(base.get_den(), static_cast<unsigned long>(exp)));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw PreconditionError("core-arith", "negative power of zero");
    return Rational(1) / rpow(base, -exp);
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor division and non-negative remainder.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer floor_rational(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

/// Nearest integer, ties rounded up.
inline Integer round_rational(const Rational& x) {
    return floor_rational(x + Rational(1, 2));
}

inline bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

inline int64_t to_i64(const Integer& n) {
    if (!n.fits_slong_p()) throw InvariantViolation("core-arith", "integer does not fit 64 bits: " + n.get_str());
    return n.get_si();
}

/// Exponent of the prime p in the nonzero integer n.
inline int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw PreconditionError("core-arith", "valuation of zero");
    Integer m = abs(n);
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

inline int valuation(const Rational& x, const Integer& p) {
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

namespace detail {

inline Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer y = seed % n, c = (seed * 7 + 3) % n, m = 128, g = 1, r = 1, q = 1, x, ys;
    auto f = [&](const Integer& v) { return mod(v * v + c, n); };
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = f(y);
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            Integer lim = std::min(m, Integer(r - k));
            for (Integer i = 0; i < lim; ++i) {
                y = f(y);
                q = mod(q * abs(Integer(x - y)), n);
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(Integer(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

inline void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long seed = 2;; ++seed) {
        Integer d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace detail

/// Prime factorization of |n| (n != 0), ascending primes.
inline std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
    if (n == 0) throw PreconditionError("core-arith", "cannot factor zero");
    Integer m = abs(n);
    std::map<Integer, int> out;
    for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Integer(p)];
            m /= p;
        }
    }
    detail::factor_into(m, out);
    return {out.begin(), out.end()};
}

/// Render a factorization as "2^3*3^3*11" ("1" when empty).
inline std::string factorization_string(const std::vector<std::pair<Integer, int>>& f) {
    if (f.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : f) {
        if (!s.empty()) s += "*";
        s += p.get_str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw PreconditionError("core-arith", "not a rational number: " + s);
    r.canonicalize();
    return r;
}

}  // namespace eisen
