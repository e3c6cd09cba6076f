#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisenhecke/arthur/coefficients.hpp"
#include "eisenhecke/arthur/parameter.hpp"
#include "eisenhecke/core/ideal.hpp"
#include "eisenhecke/core/polynomial.hpp"
#include "eisenhecke/spectra/eigensystem.hpp"

namespace eisen {

/// Satake data at a prime P of norm N: a list of terms c * N^{e/2} whose sum
/// is the trace of the Satake parameter (e doubled).
struct SatakeTerm {
    QuadExtElem c;
    int e = 0;
};

namespace detail {

inline int chi_minus3(long p) {
    if (p == 3) return 0;
    return p % 3 == 1 ? 1 : -1;
}

/// N^{k/2} for the norm of P as a rational number; N = p^2 for inert P.
inline Rational norm_power(const EisIdeal& P, int k) {
    long p = to_i64(P.p);
    if (P.split_type == SplitType::inert) return rpow(Rational(p), k);
    if (k % 2) throw InvariantViolation("arthur", "odd power of sqrt(N P): the parameter has the wrong parity");
    return rpow(Rational(p), k / 2);
}

/// Normalized Satake value of psi6 (or its conjugate) at P.
inline QuadExtElem psi6_value(const EisIdeal& P) {
    if (P.split_type == SplitType::inert) return 1;  // psi6((p)) = p^6
    if (P.split_type == SplitType::ramified) return -1;  // (sqrt(-3))^6 = -27
    throw UnsupportedCaseError("arthur", "psi6 at a split prime needs the generator normalization");
}

/// Satake trace terms of the unsmeared base of an elliptic constituent.
inline std::vector<SatakeTerm> elliptic_terms(const ArthurConstituent& c, const EisIdeal& P, const CoefficientStore& s) {
    int level = c.kind == ConstituentKind::EllipticLevel1 ? 1 : 3;
    const FormData& f = s.form_for(level, c.weight);
    long p = to_i64(P.p);
    int k = c.weight;
    QuadExtElem tr;
    switch (P.split_type) {
        case SplitType::split:
            // {alpha, beta} with alpha + beta = a_p p^{-(k-1)/2}
            tr = s.coefficient(f, static_cast<int>(p));
            break;
        case SplitType::inert: {
            // base change to the quadratic extension: {alpha^2, beta^2}
            QuadExtElem a = s.coefficient(f, static_cast<int>(p));
            int chi = f.nebentypus ? chi_minus3(p) : 1;
            tr = a * a - QuadExtElem(Integer(Integer(2 * chi) * ipow(p, static_cast<unsigned long>(k - 1))));
            return {{tr, -(k - 1)}};
        }
        case SplitType::ramified: {
            QuadExtElem a = s.coefficient(f, 3);
            if (level == 1) tr = a;
            else tr = a + QuadExtElem(ipow(3, static_cast<unsigned long>(k - 1))) / a;  // diag(a_3, 3^{k-1}/a_3)
            break;
        }
    }
    return {{tr, -(k - 1)}};
}

}  // namespace detail

/// Terms of N^{11/2} tr(t_P(Pi[d])) before scaling, as Satake terms.
inline std::vector<SatakeTerm> satake_terms(const ArthurConstituent& c, const EisIdeal& P, const CoefficientStore& s) {
    std::vector<SatakeTerm> base;
    switch (c.kind) {
        case ConstituentKind::TrivialBlock: base = {{QuadExtElem(1), 0}}; break;
        case ConstituentKind::Psi6:
        case ConstituentKind::Psi6Bar: base = {{detail::psi6_value(P), 0}}; break;
        case ConstituentKind::U4Form: {
            if (P.split_type == SplitType::ramified)
                throw UnsupportedCaseError("arthur", "the ramified formula is not applied to U4 constituents");
            if (P.split_type != SplitType::inert) throw MissingCoefficientError("arthur", "U4 traces are stored at inert primes only");
            // stored value is N^{11/2} tr
            base = {{s.u4_trace(c.atom(), static_cast<int>(to_i64(P.p))), -11}};
            break;
        }
        default: base = detail::elliptic_terms(c, P, s);
    }
    if (c.twist) {
        QuadExtElem t = detail::psi6_value(P);
        for (auto& b : base) b.c = b.c * t;
    }
    std::vector<SatakeTerm> out;
    for (const auto& b : base)
        for (int j = 0; j < c.d; ++j) out.push_back({b.c, b.e + c.d - 1 - 2 * j});
    return out;
}

/// N^{11/2} tr(t_P(Pi[d])).
inline QuadExtElem constituent_contribution(const ArthurConstituent& c, const EisIdeal& P, const CoefficientStore& s) {
    QuadExtElem sum = 0;
    for (const auto& t : satake_terms(c, P, s)) sum += t.c * QuadExtElem(detail::norm_power(P, 11 + t.e));
    return sum;
}

/// Constant term: (p^12 - 1)/(p + 1) inert, 3^6 - 1 ramified, 0 split.
inline Integer eigenvalue_constant(const EisIdeal& P) {
    long p = to_i64(P.p);
    if (P.split_type == SplitType::inert) return (ipow(p, 12) - 1) / (p + 1);
    if (P.split_type == SplitType::ramified) return ipow(3, 6) - 1;
    return 0;
}

inline QuadExtElem eigenvalue_at(const ArthurParameter& A, const EisIdeal& P, const CoefficientStore& s) {
    QuadExtElem v = QuadExtElem(eigenvalue_constant(P));
    for (const auto& c : A.constituents) v += constituent_contribution(c, P, s);
    return v;
}

enum class RowStatus { match, mismatch, excluded };

inline std::string to_string(RowStatus r) {
    switch (r) {
        case RowStatus::match: return "match";
        case RowStatus::mismatch: return "mismatch";
        default: return "excluded";
    }
}

struct TableCheck {
    int label = 0;
    std::string parameter;
    std::string op;
    RowStatus status = RowStatus::excluded;
    std::optional<QuadExtElem> computed;
    QuadExtElem expected;
    std::string note;
};

struct TableReport {
    std::vector<TableCheck> rows;

    size_t count(const std::string& op, RowStatus st) const {
        size_t n = 0;
        for (const auto& r : rows)
            if (r.op == op && r.status == st) ++n;
        return n;
    }
    /// Matches that needed stored U4 traces rather than modular-form data.
    size_t trace_matches(const std::string& op) const {
        size_t n = 0;
        for (const auto& r : rows)
            if (r.op == op && r.status == RowStatus::match && !r.note.empty()) ++n;
        return n;
    }
};

/// Compares eigenvalue_at against every row of the table at every operator.
inline TableReport verify_table(const EigenvalueTable& table, const CoefficientStore& s) {
    TableReport rep;
    for (const auto& row : table.rows) {
        ArthurParameter A = parse_parameter(row.parameter);
        for (size_t k = 0; k < table.operators.size(); ++k) {
            TableCheck c;
            c.label = row.label;
            c.parameter = row.parameter;
            c.op = table.operators[k];
            c.expected = row.eigenvalues[k];
            try {
                c.computed = eigenvalue_at(A, parse_prime_ideal(c.op), s);
                c.status = *c.computed == c.expected ? RowStatus::match : RowStatus::mismatch;
                for (const auto& k : A.constituents)
                    if (k.kind == ConstituentKind::U4Form) c.note = "uses the stored trace of " + k.atom();
            } catch (const UnsupportedCaseError& e) {
                c.status = RowStatus::excluded;
                c.note = e.what();
            }
            rep.rows.push_back(std::move(c));
        }
    }
    return rep;
}

inline nlohmann::json to_json(const TableReport& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : r.rows)
        out.push_back({{"label", c.label}, {"parameter", c.parameter}, {"operator", c.op}, {"status", to_string(c.status)},
                       {"computed", c.computed ? c.computed->str() : ""}, {"expected", c.expected.str()},
                       {"note", c.note}});
    return out;
}

struct PrimeCongruence {
    EisIdeal prime;
    bool checked = false;
    bool holds = false;
    QuadExtElem difference;
    std::string note;
};

/// Whether x lies in some prime above q of the field of x (q odd); for q
/// dividing the discriminant of that field the norm is used.
inline bool divisible_by_prime_above(const QuadExtElem& x, const Integer& q) {
    if (x.is_zero()) return true;
    if (x.is_rational()) return valuation(x.rational_part(), q) > 0;
    Integer D = x.disc();
    if (q == 2 || mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t())) return valuation(x.norm(), q) > 0;
    for (const auto& P : primes_above(q, D))
        if (valuation_at(x, P) > 0) return true;
    return false;
}

/// eigenvalue_at(A_i, P) = eigenvalue_at(A_j, P) mod q (or mod a prime above
/// q in the coefficient field) for each P; missing data skips that prime.
inline std::vector<PrimeCongruence> verify_parameter_congruence(const ArthurParameter& Ai, const ArthurParameter& Aj,
                                                                const Integer& q, const std::vector<EisIdeal>& primes,
                                                                const CoefficientStore& s) {
    std::vector<PrimeCongruence> out;
    for (const auto& P : primes) {
        PrimeCongruence r;
        r.prime = P;
        try {
            r.difference = eigenvalue_at(Ai, P, s) - eigenvalue_at(Aj, P, s);
            r.checked = true;
            r.holds = divisible_by_prime_above(r.difference, q);
        } catch (const MissingCoefficientError& e) {
            r.note = std::string("skipped: ") + e.what();
        } catch (const UnsupportedCaseError& e) {
            r.note = std::string("skipped: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// Local factor P(X) = 1 + c X + 3^{2(k-1)} X^2 at 3 of the symmetric square
/// of a weight-k form with character chi_{-3}, c = -(a_3^2 + conj(a_3)^2).
inline Polynomial sym2_euler_factor_at_3(int k, const QuadExtElem& a3) {
    Integer n = ipow(3, static_cast<unsigned long>(k - 1));
    if (a3.norm() != Rational(n))
        throw PreconditionError("arthur", "a_3 * conj(a_3) = " + a3.norm().get_str() + " differs from 3^(k-1)");
    QuadExtElem s = a3 * a3 + a3.conj() * a3.conj();
    if (!s.is_rational()) throw InvariantViolation("arthur", "a_3^2 + conj(a_3)^2 is not rational");
    return Polynomial({Rational(1), -s.rational_part(), Rational(n * n)});
}

}  // namespace eisen
