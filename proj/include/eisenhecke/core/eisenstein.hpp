#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "eisenhecke/core/bigint.hpp"

namespace eisen {

/// Element a + b*w of Q(w) with w^2 + w + 1 = 0, coordinates in the ring T.
///
/// With T an integer type this is Z[w], the ring of integers of Q(sqrt(-3));
/// with T = Rational it is the field itself. The w-basis is used everywhere so
/// that integral elements are exactly those with integral coordinates.
template <class T>
struct Eisenstein {
    T a{};
    T b{};

    Eisenstein() = default;
    Eisenstein(T a_, T b_) : a(std::move(a_)), b(std::move(b_)) {}
    // NOLINTNEXTLINE(google-explicit-constructor): integers embed naturally
    Eisenstein(int v) : a(v), b(0) {}

    static Eisenstein omega() { return {T(0), T(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const Eisenstein& x, const Eisenstein& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }

    friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) { return {x.a + y.a, x.b + y.b}; }
    friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) { return {x.a - y.a, x.b - y.b}; }
    friend Eisenstein operator-(const Eisenstein& x) { return {-x.a, -x.b}; }
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
        T bd = x.b * y.b;
        return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
    }
    Eisenstein& operator+=(const Eisenstein& y) { a += y.a; b += y.b; return *this; }
    Eisenstein& operator-=(const Eisenstein& y) { a -= y.a; b -= y.b; return *this; }
    Eisenstein& operator*=(const Eisenstein& y) { return *this = *this * y; }

    friend Eisenstein operator*(const T& s, const Eisenstein& x) { return {s * x.a, s * x.b}; }

    /// Complex conjugate: w -> w^2 = -1 - w.
    Eisenstein conj() const { return {a - b, -b}; }

    /// Field norm a^2 - ab + b^2 (always >= 0).
    T norm() const { return a * a - a * b + b * b; }

    /// Trace to Q: 2a - b.
    T trace() const { return T(2) * a - b; }
};

using EisInt = Eisenstein<Integer>;
using Eis64 = Eisenstein<int64_t>;
using EisQ = Eisenstein<Rational>;

inline EisQ to_field(const EisInt& x) { return {Rational(x.a), Rational(x.b)}; }
inline EisQ to_field(const Eis64& x) { return {Rational(Integer(static_cast<long>(x.a))), Rational(Integer(static_cast<long>(x.b)))}; }
inline EisInt to_big(const Eis64& x) { return {Integer(static_cast<long>(x.a)), Integer(static_cast<long>(x.b))}; }
inline Eis64 to_small(const EisInt& x) { return {to_i64(x.a), to_i64(x.b)}; }

inline bool is_integral(const EisQ& x) { return x.a.get_den() == 1 && x.b.get_den() == 1; }

inline EisInt to_integral(const EisQ& x) {
    if (!is_integral(x)) throw InvariantViolation("core-arith", "element is not an Eisenstein integer");
    return {x.a.get_num(), x.b.get_num()};
}

inline EisQ inverse(const EisQ& x) {
    Rational n = x.norm();
    if (n == 0) throw PreconditionError("core-arith", "division by zero");
    EisQ c = x.conj();
    return {c.a / n, c.b / n};
}

inline EisQ operator/(const EisQ& x, const EisQ& y) { return x * inverse(y); }

/// Exact quotient in Z[w]; nullopt when y does not divide x.
inline std::optional<EisInt> exact_div(const EisInt& x, const EisInt& y) {
    if (y.is_zero()) throw PreconditionError("core-arith", "division by zero");
    Integer n = y.norm();
    EisInt p = x * y.conj();
    if (!mpz_divisible_p(p.a.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(p.b.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    return EisInt{p.a / n, p.b / n};
}

inline bool divides(const EisInt& y, const EisInt& x) { return exact_div(x, y).has_value(); }

/// Euclidean division x = q*y + r with norm(r) < norm(y) (Z[w] is norm-Euclidean).
inline std::pair<EisInt, EisInt> divmod(const EisInt& x, const EisInt& y) {
    if (y.is_zero()) throw PreconditionError("core-arith", "division by zero");
    Integer n = y.norm();
    EisInt p = x * y.conj();
    EisInt q{round_rational(Rational(p.a, n)), round_rational(Rational(p.b, n))};
    return {q, x - q * y};
}

/// Nearest Eisenstein integer to a field element.
inline EisInt round_eisenstein(const EisQ& x) {
    EisInt best{round_rational(x.a), round_rational(x.b)};
    Rational best_n = (x - to_field(best)).norm();
    Integer fa = floor_rational(x.a), fb = floor_rational(x.b);
    for (int da = 0; da < 2; ++da)
        for (int db = 0; db < 2; ++db) {
            EisInt c{fa + da, fb + db};
            Rational n = (x - to_field(c)).norm();
            if (n < best_n) { best = c; best_n = n; }
        }
    return best;
}

inline const std::array<EisInt, 6>& units() {
    static const std::array<EisInt, 6> u = {EisInt{1, 0},  EisInt{-1, 0}, EisInt{0, 1},
                                            EisInt{0, -1}, EisInt{-1, -1}, EisInt{1, 1}};
    return u;
}

inline bool is_unit(const EisInt& x) { return x.norm() == 1; }

/// Associate of x chosen canonically: among the six unit multiples, the one
/// with a > b >= 0 (argument in [0, pi/3); zero maps to zero).
inline EisInt normalize_associate(const EisInt& x) {
    if (x.is_zero()) return x;
    for (const auto& u : units()) {
        EisInt y = u * x;
        if (y.a > y.b && y.b >= 0) return y;
    }
    throw InvariantViolation("core-arith", "no canonical associate found");
}

inline EisInt gcd(EisInt x, EisInt y) {
    while (!y.is_zero()) {
        EisInt r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return normalize_associate(x);
}

inline Integer eis_norm(const EisInt& x) { return x.norm(); }

/// sqrt(-3) = 1 + 2w.
inline EisInt sqrt_minus3() { return {1, 2}; }

template <class T>
std::string to_string(const Eisenstein<T>& x) {
    std::ostringstream os;
    os << x.a << (x.b < 0 ? "-" : "+") << (x.b < 0 ? T(-x.b) : x.b) << "*w";
    return os.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Eisenstein<T>& x) {
    return os << to_string(x);
}

/// Rendering as u+v*sqrt(-3); only defined when both coordinates are
/// integers, i.e. when b is even.
inline std::optional<std::string> to_sqrt3_string(const EisInt& x) {
    if (!mpz_even_p(x.b.get_mpz_t())) return std::nullopt;
    Integer v = x.b / 2, u = x.a - v;
    return u.get_str() + (v < 0 ? "-" : "+") + Integer(abs(v)).get_str() + "*sqrt(-3)";
}

/// Parses "a+b*w", "a-b*w", "a", "b*w", "w".
inline EisInt parse_eisenstein(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw PreconditionError("core-arith", "empty Eisenstein integer");
    Integer a = 0, b = 0;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        bool neg = !term.empty() && term[0] == '-';
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) term = term.substr(1);
        bool is_w = !term.empty() && term.back() == 'w';
        if (is_w) {
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
            if (term.empty()) term = "1";
        }
        Integer v;
        if (term.empty() || v.set_str(term, 10) != 0)
            throw PreconditionError("core-arith", "malformed Eisenstein integer: " + text);
        if (neg) v = -v;
        (is_w ? b : a) += v;
    }
    return {a, b};
}

}  // namespace eisen

template <class T>
struct std::hash<eisen::Eisenstein<T>> {
    size_t operator()(const eisen::Eisenstein<T>& x) const noexcept {
        size_t h1 = std::hash<long>{}(static_cast<long>(x.a)), h2 = std::hash<long>{}(static_cast<long>(x.b));
        return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
    }
};
