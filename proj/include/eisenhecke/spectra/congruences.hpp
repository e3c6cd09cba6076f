#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "eisenhecke/spectra/eigensystem.hpp"

namespace eisen {

/// A prime of the coefficient field above a rational prime q: plain q when
/// the eigenvalues involved are rational or q does not split; otherwise one of
/// the two primes (q, sqrt(D) -+ s) with s the smallest square root of D mod q.
struct CongruenceModulus {
    Integer q;
    int sign = 0;  // +1: (q, sqrt(D) - s), -1: (q, sqrt(D) + s)

    std::string str() const { return q.get_str() + (sign > 0 ? "+" : sign < 0 ? "-" : ""); }
    friend bool operator<(const CongruenceModulus& a, const CongruenceModulus& b) {
        return a.q != b.q ? a.q < b.q : a.sign < b.sign;
    }
    friend bool operator==(const CongruenceModulus& a, const CongruenceModulus& b) {
        return a.q == b.q && a.sign == b.sign;
    }
};

inline CongruenceModulus parse_modulus(const std::string& s) {
    CongruenceModulus m;
    std::string t = s;
    if (!t.empty() && (t.back() == '+' || t.back() == '-')) {
        m.sign = t.back() == '+' ? 1 : -1;
        t.pop_back();
    }
    m.q = Integer(t);
    return m;
}

struct CongruenceReport {
    int i = 0, j = 0;
    CongruenceModulus modulus;
    std::string evidence;  // denominator-lemma[-ambiguous] | difference-gcd | vector-reduction
    std::vector<std::string> operators;
    bool proved = false;
};

namespace detail {

/// ord at a prime above q of Q(sqrt(D)); q odd. Ramified q uses the norm.
inline int ord_at(const QuadExtElem& x, const Integer& q, int sign, const Integer& D) {
    if (x.is_rational() || sign == 0) {
        if (x.is_rational()) return valuation(x.rational_part(), q);
        if (mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t())) return valuation(x.norm(), q);
        return valuation(x.norm(), q) / 2;
    }
    auto ps = primes_above(q, D);
    return valuation_at(x, sign > 0 ? ps[0] : ps[1]);
}

/// The primes of Q(sqrt(D)) above q as moduli (one entry unless q splits).
inline std::vector<CongruenceModulus> moduli_above(const Integer& q, const Integer& D) {
    if (D == 1 || q == 2 || mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t()) || legendre(D, q) != 1) return {{q, 0}};
    return {{q, 1}, {q, -1}};
}

inline bool congruent_at(const EigenSystem& E, size_t s, size_t t, const CongruenceModulus& m, const Integer& D) {
    for (size_t k = 0; k < E.operators.size(); ++k) {
        QuadExtElem d = E.spaces[s].eigenvalues[k] - E.spaces[t].eigenvalues[k];
        if (d.is_zero()) continue;
        if (ord_at(d, m.q, m.sign, D) <= 0) return false;
    }
    return true;
}

inline Integer system_field(const EigenSystem& E) {
    Integer D = 1;
    for (const auto& S : E.spaces)
        if (S.field != 1) {
            if (D != 1 && D != S.field) throw UnsupportedCaseError("spectra", "eigenvalues in two different quadratic fields");
            D = S.field;
        }
    return D;
}

inline bool space_rational(const EigenSpace& S) { return S.field == 1; }

inline bool are_conjugate(const EigenSystem& E, size_t s, size_t t) {
    for (size_t k = 0; k < E.operators.size(); ++k)
        if (E.spaces[s].eigenvalues[k] != E.spaces[t].eigenvalues[k].conj()) return false;
    return true;
}

/// Rational primes dividing a denominator of some coordinate.
inline std::set<Integer> denominator_primes(const QVec& w) {
    Integer den = 1;
    for (const auto& x : w) {
        den = lcm(den, x.rational_part().get_den());
        den = lcm(den, x.surd_part().get_den());
    }
    std::set<Integer> out;
    for (const auto& [p, e] : factorize(den)) out.insert(p);
    return out;
}

}  // namespace detail

/// Denominator lemma: if v = sum c_i v_i with integral v and ord(c_i v_i) < 0
/// at a prime above q, then lambda_i = lambda_j mod that prime for some j != i.
/// Each probe is expanded over the one-dimensional eigenspaces; for every
/// negative valuation at q >= q_min the labels j congruent to i under every
/// operator are collected. A unique j proves the congruence; several j (a
/// residual block counts once per label) only yield candidates. Galois
/// conjugate systems are always congruent at primes dividing D and are skipped
/// there.
inline std::vector<CongruenceReport> scan_congruences_lemma(const EigenSystem& E,
                                                            const std::vector<std::vector<Integer>>& probes,
                                                            const Integer& q_min = 11) {
    const Integer D = detail::system_field(E);
    EigenBasis basis(E);
    std::map<std::tuple<int, int, CongruenceModulus>, bool> found;  // value: proved
    for (const auto& v : probes) {
        QVec qv;
        for (const auto& x : v) qv.emplace_back(x);
        Expansion ex = basis.expand(qv);
        for (size_t s = 0; s < E.spaces.size(); ++s) {
            if (E.spaces[s].dim() != 1) continue;
            const QVec& w = ex.projections[s];
            for (const Integer& q : detail::denominator_primes(w)) {
                if (q < q_min || q == 2) continue;
                bool ramified = mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t()) != 0;
                for (const auto& m : detail::moduli_above(q, D)) {
                    int ord = 0;
                    bool any = false;
                    for (const auto& x : w) {
                        if (x.is_zero()) continue;
                        int o = detail::ord_at(x, q, m.sign, D);
                        ord = any ? std::min(ord, o) : o;
                        any = true;
                    }
                    if (!any || ord >= 0) continue;
                    std::vector<std::pair<int, CongruenceModulus>> partners;
                    for (size_t t = 0; t < E.spaces.size(); ++t) {
                        if (t == s || (ramified && detail::are_conjugate(E, s, t))) continue;
                        bool both_rational = detail::space_rational(E.spaces[s]) && detail::space_rational(E.spaces[t]);
                        CongruenceModulus mm = both_rational ? CongruenceModulus{q, 0} : m;
                        if (!detail::congruent_at(E, s, t, mm, D)) continue;
                        for (int b : E.spaces[t].labels) partners.emplace_back(b, mm);
                    }
                    int a = E.spaces[s].labels.front();
                    for (const auto& [b, mm] : partners) {
                        auto key = std::make_tuple(std::min(a, b), std::max(a, b), mm);
                        found[key] = found[key] || partners.size() == 1;
                    }
                }
            }
        }
    }
    std::vector<CongruenceReport> out;
    for (const auto& [key, proved] : found) {
        auto [a, b, m] = key;
        out.push_back({a, b, m, proved ? "denominator-lemma" : "denominator-lemma-ambiguous", E.operators, proved});
    }
    return out;
}

inline std::vector<CongruenceReport> proved_only(const std::vector<CongruenceReport>& rs) {
    std::vector<CongruenceReport> out;
    for (const auto& r : rs)
        if (r.proved) out.push_back(r);
    return out;
}

/// All standard basis vectors of length h.
inline std::vector<std::vector<Integer>> standard_probes(size_t h) {
    std::vector<std::vector<Integer>> out;
    for (size_t i = 0; i < h; ++i) {
        std::vector<Integer> e(h, 0);
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

/// gcd over operators of |N(lambda_i - lambda_j)|; nullopt when the two
/// eigenvalue systems coincide.
inline std::optional<Integer> difference_gcd(const EigenSystem& E, int i, int j) {
    size_t s = E.space_of(i), t = E.space_of(j);
    Integer g = 0;
    for (size_t k = 0; k < E.operators.size(); ++k) {
        QuadExtElem d = E.spaces[s].eigenvalues[k] - E.spaces[t].eigenvalues[k];
        Rational n = d.is_rational() ? d.rational_part() : d.norm();
        if (n.get_den() != 1) throw InvariantViolation("spectra", "eigenvalue difference is not integral");
        g = gcd(g, abs(n.get_num()));
    }
    if (g == 0) return std::nullopt;
    return g;
}

/// Pairs of distinct eigenvalue systems whose difference gcd has a prime
/// factor >= q_min that the lemma scan did not already account for.
inline std::vector<CongruenceReport> scan_congruence_candidates(const EigenSystem& E, const Integer& q_min,
                                                                const std::vector<CongruenceReport>& known) {
    const Integer D = detail::system_field(E);
    std::set<std::tuple<int, int, Integer>> seen;
    for (const auto& r : known) {
        seen.insert({r.i, r.j, r.modulus.q});
        seen.insert({r.j, r.i, r.modulus.q});
    }
    std::vector<CongruenceReport> out;
    for (size_t s = 0; s < E.spaces.size(); ++s)
        for (size_t t = s + 1; t < E.spaces.size(); ++t) {
            auto g = difference_gcd(E, E.spaces[s].labels.front(), E.spaces[t].labels.front());
            if (!g) continue;
            for (const auto& [q, e] : factorize(*g)) {
                if (q < q_min || q == 2) continue;
                if (mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t()) && detail::are_conjugate(E, s, t)) continue;
                bool both_rational = detail::space_rational(E.spaces[s]) && detail::space_rational(E.spaces[t]);
                std::vector<CongruenceModulus> ms = both_rational ? std::vector<CongruenceModulus>{{q, 0}}
                                                                  : detail::moduli_above(q, D);
                for (const auto& m : ms) {
                    if (!detail::congruent_at(E, s, t, m, D)) continue;
                    for (int a : E.spaces[s].labels)
                        for (int b : E.spaces[t].labels) {
                            if (seen.count({a, b, q})) continue;
                            out.push_back({a, b, m, "difference-gcd", E.operators, false});
                        }
                }
            }
        }
    return out;
}

/// Whether v_i = c v_j mod q for a scalar c != 0 mod q (rational eigenvectors).
struct ReductionCheck {
    bool holds = false;
    Integer scalar = 0;
};

inline ReductionCheck verify_vector_reduction(const EigenSystem& E, int i, int j, const Integer& q) {
    const QVec& vi = E.vector(i);
    const QVec& vj = E.vector(j);
    auto integral = [&](const QVec& v) {
        std::vector<Integer> out;
        for (const auto& x : v) {
            if (!x.is_rational() || x.rational_part().get_den() != 1)
                throw PreconditionError("spectra", "vector reduction needs rational integral eigenvectors");
            out.push_back(mod(x.rational_part().get_num(), q));
        }
        return out;
    };
    auto a = integral(vi), b = integral(vj);
    bool zero_a = std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
    bool zero_b = std::all_of(b.begin(), b.end(), [](const Integer& x) { return x == 0; });
    if (zero_a || zero_b) throw PreconditionError("spectra", "q divides the content of an eigenvector");
    size_t k = 0;
    while (b[k] == 0) ++k;
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), b[k].get_mpz_t(), q.get_mpz_t()))
        throw PreconditionError("spectra", "modulus is not prime");
    Integer c = mod(a[k] * inv, q);
    ReductionCheck r{c != 0, c};
    for (size_t t = 0; t < a.size() && r.holds; ++t)
        if (mod(a[t] - c * b[t], q) != 0) r.holds = false;
    return r;
}

inline nlohmann::json to_json(const std::vector<CongruenceReport>& rs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rs)
        out.push_back({{"i", r.i}, {"j", r.j}, {"modulus", r.modulus.str()}, {"evidence", r.evidence}, {"proved", r.proved},
                       {"operators", r.operators}});
    return out;
}

}  // namespace eisen
