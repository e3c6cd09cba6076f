#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eisenhecke/core/eisenstein.hpp"
#include "eisenhecke/core/quadratic.hpp"

namespace eisen {

enum class SplitType { split, inert, ramified };

inline std::string to_string(SplitType t) {
    switch (t) {
        case SplitType::split: return "split";
        case SplitType::inert: return "inert";
        case SplitType::ramified: return "ramified";
    }
    return "?";
}

/// A nonzero prime ideal of Z[w], stored by a canonical generator.
struct EisIdeal {
    EisInt generator;
    Integer residue_norm;
    SplitType split_type = SplitType::inert;
    Integer p;  // rational prime below

    /// The conjugate ideal (equal to *this unless split).
    EisIdeal conj() const {
        if (split_type != SplitType::split) return *this;
        return {normalize_associate(generator.conj()), residue_norm, split_type, p};
    }

    std::string str() const {
        if (split_type == SplitType::inert) return "(" + p.get_str() + ")";
        return "(" + to_string(generator) + ")";
    }

    friend bool operator==(const EisIdeal& x, const EisIdeal& y) { return x.generator == y.generator; }
    friend bool operator!=(const EisIdeal& x, const EisIdeal& y) { return !(x == y); }
    friend bool operator<(const EisIdeal& x, const EisIdeal& y) {
        if (x.p != y.p) return x.p < y.p;
        if (x.generator.a != y.generator.a) return x.generator.a < y.generator.a;
        return x.generator.b < y.generator.b;
    }
};

struct PrimeClassification {
    SplitType type;
    std::vector<EisIdeal> ideals;
};

/// Prime ideals of Z[w] above the rational prime p.
///
/// For split p the first ideal is generated by gcd(p, w - r) with r the
/// smallest root of x^2 + x + 1 mod p, i.e. w = r mod the first ideal.
inline PrimeClassification classify_prime(const Integer& p) {
    if (!is_probable_prime(p)) throw PreconditionError("core-arith", p.get_str() + " is not prime");
    if (p == 3) return {SplitType::ramified, {EisIdeal{normalize_associate(sqrt_minus3()), 3, SplitType::ramified, 3}}};
    if (mod(p, 3) == 2) return {SplitType::inert, {EisIdeal{EisInt{p, 0}, p * p, SplitType::inert, p}}};
    // x = (-1 + sqrt(-3))/2 mod p
    Integer s = sqrt_mod(Integer(-3), p), inv2 = (p + 1) / 2;
    Integer r1 = mod((s - 1) * inv2, p), r2 = mod((-s - 1) * inv2, p);
    Integer r = r1 < r2 ? r1 : r2;
    EisInt g = gcd(EisInt{p, 0}, EisInt{-r, 1});
    if (g.norm() != p) throw InvariantViolation("core-arith", "split prime generator has wrong norm");
    EisIdeal P{g, p, SplitType::split, p};
    return {SplitType::split, {P, P.conj()}};
}

inline PrimeClassification classify_prime(long p) { return classify_prime(Integer(p)); }

/// The prime ideal named by text: a rational prime ("2", "3", "7" picks the
/// first prime above it) or an Eisenstein generator ("1+2*w", "3+2*w").
inline EisIdeal parse_prime_ideal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') s += c;
    if (s == "sqrt(-3)" || s == "sqrt-3" || s == "s3" || s == "r3") s = "3";
    if (s.find('w') == std::string::npos) {
        Integer p;
        if (p.set_str(s, 10) != 0) throw PreconditionError("core-arith", "malformed prime: " + text);
        return classify_prime(p).ideals.front();
    }
    EisInt g = parse_eisenstein(s);
    Integer n = g.norm();
    Integer p;
    if (is_probable_prime(n)) {
        p = n;
    } else {
        Integer r;
        if (!mpz_perfect_square_p(n.get_mpz_t())) throw PreconditionError("core-arith", "not a prime ideal: " + text);
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        p = r;
    }
    auto cls = classify_prime(p);
    for (const auto& P : cls.ideals)
        if (divides(P.generator, g) && P.residue_norm == n) return P;
    throw PreconditionError("core-arith", "not a prime ideal: " + text);
}

/// A fractional ideal of Q(w) as a product of prime powers.
struct FactoredIdeal {
    std::map<EisIdeal, int> exponents;

    bool is_trivial() const { return exponents.empty(); }

    FactoredIdeal& operator*=(const FactoredIdeal& o) {
        for (const auto& [P, e] : o.exponents) {
            int& v = exponents[P];
            v += e;
            if (v == 0) exponents.erase(P);
        }
        return *this;
    }
    friend FactoredIdeal operator*(FactoredIdeal x, const FactoredIdeal& y) { return x *= y; }
    FactoredIdeal inverse() const {
        FactoredIdeal r;
        for (const auto& [P, e] : exponents) r.exponents[P] = -e;
        return r;
    }
    Rational norm() const {
        Rational n = 1;
        for (const auto& [P, e] : exponents) n *= rpow(Rational(P.residue_norm), e);
        return n;
    }
    friend bool operator==(const FactoredIdeal& x, const FactoredIdeal& y) { return x.exponents == y.exponents; }

    std::string str() const {
        if (exponents.empty()) return "(1)";
        std::string s;
        for (const auto& [P, e] : exponents) {
            if (!s.empty()) s += "*";
            s += P.str();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

/// Valuation of a nonzero Eisenstein integer at a prime ideal.
inline int valuation(EisInt x, const EisIdeal& P) {
    if (x.is_zero()) throw PreconditionError("core-arith", "valuation of zero");
    int v = 0;
    while (auto q = exact_div(x, P.generator)) {
        x = *q;
        ++v;
    }
    return v;
}

/// Factorization of the principal ideal (x) for nonzero x in Q(w).
inline FactoredIdeal factor_principal(const EisQ& x) {
    if (x.a == 0 && x.b == 0) throw PreconditionError("core-arith", "zero ideal");
    Integer den = lcm(x.a.get_den(), x.b.get_den());
    EisInt num{x.a.get_num() * (den / x.a.get_den()), x.b.get_num() * (den / x.b.get_den())};
    FactoredIdeal r;
    auto add = [&](const EisInt& y, int sign) {
        if (is_unit(y)) return;
        for (const auto& [p, e] : factorize(y.norm())) {
            (void)e;
            for (const auto& P : classify_prime(p).ideals) {
                int v = valuation(y, P);
                if (v != 0) r.exponents[P] += sign * v;
            }
        }
    };
    add(num, +1);
    add(EisInt{den, 0}, -1);
    for (auto it = r.exponents.begin(); it != r.exponents.end();)
        it = it->second == 0 ? r.exponents.erase(it) : std::next(it);
    return r;
}

inline FactoredIdeal factor_principal(const EisInt& x) { return factor_principal(to_field(x)); }

}  // namespace eisen
