#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eisenhecke/core/bigint.hpp"

namespace eisen {

/// Element a + b*sqrt(D) of Q(sqrt(D)). D = 1 tags plain rationals (b = 0).
///
/// A rational element (b = 0) may be combined with an element of any field;
/// combining two irrational elements with different D throws.
class QuadExtElem {
public:
    QuadExtElem() : a_(0), b_(0), d_(1) {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    QuadExtElem(const Rational& a) : a_(a), b_(0), d_(1) {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    QuadExtElem(const Integer& a) : a_(a), b_(0), d_(1) {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    QuadExtElem(long a) : a_(a), b_(0), d_(1) {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    QuadExtElem(int a) : a_(a), b_(0), d_(1) {}
    QuadExtElem(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ == 0) throw PreconditionError("core-arith", "sqrt(0) is not a field generator");
        a_.canonicalize();
        b_.canonicalize();
        if (b_ == 0) d_ = 1;
        if (d_ == 1 && b_ != 0) {
            a_ += b_;
            b_ = 0;
        }
    }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const Integer& disc() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExtElem conj() const { return {a_, -b_, d_}; }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    Rational trace() const { return 2 * a_; }

    /// Algebraic integer test: trace and norm both in Z.
    bool is_integral() const {
        Rational t = trace(), n = norm();
        return t.get_den() == 1 && n.get_den() == 1;
    }

    friend Integer common_disc(const QuadExtElem& x, const QuadExtElem& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw PreconditionError("core-arith", "mixed quadratic fields sqrt(" + x.d_.get_str() + ") and sqrt(" +
                                                      y.d_.get_str() + ")");
        return x.d_;
    }

    friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
        Integer d = common_disc(x, y);
        return {x.a_ + y.a_, x.b_ + y.b_, d};
    }
    friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) {
        Integer d = common_disc(x, y);
        return {x.a_ - y.a_, x.b_ - y.b_, d};
    }
    friend QuadExtElem operator-(const QuadExtElem& x) { return {-x.a_, -x.b_, x.d_}; }
    friend QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) {
        Integer d = common_disc(x, y);
        return {x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d};
    }
    QuadExtElem inverse() const {
        Rational n = norm();
        if (n == 0) throw PreconditionError("core-arith", "division by zero");
        return {a_ / n, -b_ / n, d_};
    }
    friend QuadExtElem operator/(const QuadExtElem& x, const QuadExtElem& y) { return x * y.inverse(); }

    QuadExtElem& operator+=(const QuadExtElem& y) { return *this = *this + y; }
    QuadExtElem& operator-=(const QuadExtElem& y) { return *this = *this - y; }
    QuadExtElem& operator*=(const QuadExtElem& y) { return *this = *this * y; }

    friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExtElem& x, const QuadExtElem& y) { return !(x == y); }

    /// Total order used only for sorting (rational part, then surd part).
    friend bool operator<(const QuadExtElem& x, const QuadExtElem& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    /// Approximate real value (D > 0) for display and ordering of conjugates.
    double approx() const {
        double s = d_ > 0 ? std::sqrt(d_.get_d()) : 0.0;
        return a_.get_d() + b_.get_d() * s;
    }

    std::string str() const {
        if (b_ == 0) return a_.get_str();
        std::string s = a_ == 0 ? "" : a_.get_str();
        Rational ab = abs(b_);
        if (b_ < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (ab != 1) s += ab.get_str() + "*";
        return s + "sqrt(" + d_.get_str() + ")";
    }

private:
    Rational a_;
    Rational b_;
    Integer d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExtElem& x) { return os << x.str(); }
inline std::string to_string(const QuadExtElem& x) { return x.str(); }

/// Parses "a", "a+b*sqrt(D)", "a-sqrt(D)", "b*sqrt(D)"; a and b may be fractions.
inline QuadExtElem parse_quadratic(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw PreconditionError("core-arith", "empty quadratic element");
    Rational a = 0, b = 0;
    Integer d = 1;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        int depth = 0;
        while (pos < s.size() && (depth > 0 || (s[pos] != '+' && s[pos] != '-'))) {
            if (s[pos] == '(') ++depth;
            if (s[pos] == ')') --depth;
            ++pos;
        }
        std::string term = s.substr(start, pos - start);
        bool neg = !term.empty() && term[0] == '-';
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) term = term.substr(1);
        auto sq = term.find("sqrt(");
        if (sq != std::string::npos) {
            if (term.back() != ')') throw PreconditionError("core-arith", "malformed surd: " + text);
            Integer dd;
            if (dd.set_str(term.substr(sq + 5, term.size() - sq - 6), 10) != 0)
                throw PreconditionError("core-arith", "malformed surd: " + text);
            if (d != 1 && dd != d) throw PreconditionError("core-arith", "two different surds in " + text);
            d = dd;
            std::string coef = term.substr(0, sq);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            Rational c = coef.empty() ? Rational(1) : parse_rational(coef);
            b += neg ? Rational(-c) : c;
        } else {
            Rational c = parse_rational(term);
            a += neg ? Rational(-c) : c;
        }
    }
    return {a, b, d};
}

/// A prime of Q(sqrt(D)) above an odd rational prime q not dividing D.
/// For split q the two primes are (q, sqrt(D) - s) and (q, sqrt(D) + s) where
/// s is the declared square root of D mod q; sign = +1 selects the first.
struct QuadPrime {
    Integer q;
    bool split = false;
    Integer root;  // s, meaningful when split
    int sign = 0;  // +1 / -1 when split, 0 when inert

    std::string tag() const {
        if (!split) return "(" + q.get_str() + ")";
        return "(" + q.get_str() + ",sqrt-" + (sign > 0 ? root : Integer(q - root)).get_str() + ")";
    }
    friend bool operator==(const QuadPrime& x, const QuadPrime& y) {
        return x.q == y.q && x.split == y.split && x.sign == y.sign && x.root == y.root;
    }
};

/// Legendre symbol (a/q) for an odd prime q.
inline int legendre(const Integer& a, const Integer& q) {
    Integer r = mod(a, q);
    return mpz_legendre(r.get_mpz_t(), q.get_mpz_t());
}

/// Square root of a mod an odd prime q (Tonelli-Shanks); a must be a nonzero square.
inline Integer sqrt_mod(const Integer& a_in, const Integer& q) {
    Integer a = mod(a_in, q);
    if (a == 0) return 0;
    if (legendre(a, q) != 1) throw PreconditionError("core-arith", "not a square modulo " + q.get_str());
    auto powm = [&](const Integer& b, const Integer& e) {
        Integer r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        return r;
    };
    Integer qm1 = q - 1, s = qm1;
    unsigned long e = 0;
    while (mpz_even_p(s.get_mpz_t())) {
        s /= 2;
        ++e;
    }
    Integer z = 2;
    while (legendre(z, q) != -1) ++z;
    Integer c = powm(z, s), x = powm(a, (s + 1) / 2), t = powm(a, s);
    unsigned long m = e;
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = mod(tt * tt, q);
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = mod(b * b, q);
        x = mod(x * b, q);
        c = mod(b * b, q);
        t = mod(t * c, q);
        m = i;
    }
    Integer other = q - x;
    return x < other ? x : other;
}

/// Primes of Q(sqrt(D)) above q, with s the smallest square root of D mod q.
inline std::vector<QuadPrime> primes_above(const Integer& q, const Integer& D) {
    if (q == 2 || !is_probable_prime(q))
        throw UnsupportedCaseError("core-arith", "ideal valuation needs an odd prime, got " + q.get_str());
    if (mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t()))
        throw UnsupportedCaseError("core-arith", q.get_str() + " ramifies in Q(sqrt(" + D.get_str() + "))");
    int l = legendre(D, q);
    if (l == -1) return {QuadPrime{q, false, 0, 0}};
    Integer s = sqrt_mod(D, q);
    return {QuadPrime{q, true, s, +1}, QuadPrime{q, true, s, -1}};
}

/// Valuation of a nonzero x at a prime above an odd unramified q.
inline int valuation_at(const QuadExtElem& x, const QuadPrime& P) {
    if (x.is_zero()) throw PreconditionError("core-arith", "valuation of zero");
    if (!P.split) {
        int v = valuation(x.norm(), P.q);
        return v / 2;
    }
    const Rational& a = x.rational_part();
    const Rational& b = x.surd_part();
    int m = (b == 0) ? valuation(a, P.q)
                     : (a == 0 ? valuation(b, P.q) : std::min(valuation(a, P.q), valuation(b, P.q)));
    // y = x / q^m has q-integral coordinates, not both divisible by q
    Rational scale = rpow(Rational(P.q), -m);
    Rational ya = a * scale, yb = b * scale;
    Integer qa = mod(ya.get_num(), P.q), qb = mod(yb.get_num(), P.q);
    Integer ia, ib;
    mpz_invert(ia.get_mpz_t(), Integer(ya.get_den()).get_mpz_t(), P.q.get_mpz_t());
    mpz_invert(ib.get_mpz_t(), Integer(yb.get_den()).get_mpz_t(), P.q.get_mpz_t());
    Integer s = P.sign > 0 ? P.root : Integer(P.q - P.root);
    Integer red = mod(qa * ia + qb * ib * s, P.q);
    int rest = valuation(Rational(ya * ya - Rational(x.disc()) * yb * yb), P.q);
    return m + (red == 0 ? rest : 0);
}

/// Valuations of x at every prime of Q(sqrt(D)) above q.
inline std::vector<std::pair<QuadPrime, int>> ideal_valuation(const QuadExtElem& x, const Integer& q,
                                                              const Integer& D) {
    if (!x.is_rational() && x.disc() != D)
        throw PreconditionError("core-arith", "element does not lie in Q(sqrt(" + D.get_str() + "))");
    std::vector<std::pair<QuadPrime, int>> out;
    for (const auto& P : primes_above(q, D)) out.emplace_back(P, valuation_at(x, P));
    return out;
}

}  // namespace eisen
