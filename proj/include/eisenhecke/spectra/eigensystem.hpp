#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "eisenhecke/hecke/hecke.hpp"
#include "eisenhecke/spectra/roots.hpp"

namespace eisen {

using QVec = std::vector<QuadExtElem>;
using QMatrix = Matrix<QuadExtElem>;

/// A common eigenspace of the stored operators. One-dimensional spaces carry
/// one label; a residual block of dimension d carries d labels, one per
/// basis vector.
struct EigenSpace {
    std::vector<int> labels;
    QVec eigenvalues;  // one per operator
    std::vector<QVec> basis;
    Integer field = 1;  // D of Q(sqrt(D)) containing the eigenvalues, 1 for Q

    size_t dim() const { return basis.size(); }
};

struct EigenSystem {
    std::vector<std::string> operators;  // prime labels
    std::vector<IntMatrix> matrices;
    std::vector<EigenSpace> spaces;
    size_t h = 0;

    /// Index of the space carrying a label.
    size_t space_of(int label) const {
        for (size_t s = 0; s < spaces.size(); ++s)
            for (int l : spaces[s].labels)
                if (l == label) return s;
        throw PreconditionError("spectra", "no eigenspace with label " + std::to_string(label));
    }
    /// Basis vector attached to a label.
    const QVec& vector(int label) const {
        const auto& s = spaces[space_of(label)];
        for (size_t k = 0; k < s.labels.size(); ++k)
            if (s.labels[k] == label) return s.basis[k];
        throw PreconditionError("spectra", "no eigenvector with label " + std::to_string(label));
    }
    const QuadExtElem& eigenvalue(int label, size_t op) const { return spaces[space_of(label)].eigenvalues.at(op); }
    size_t operator_index(const std::string& name) const {
        for (size_t k = 0; k < operators.size(); ++k)
            if (operators[k] == name) return k;
        throw PreconditionError("spectra", "no operator " + name);
    }
};

namespace detail {

inline QMatrix to_quadratic(const IntMatrix& m) {
    return m.map([](const Integer& x) { return QuadExtElem(x); });
}

/// Columns of W spanning W cap ker(A).
inline std::vector<QVec> intersect_kernel(const QMatrix& A, const std::vector<QVec>& W) {
    const size_t n = A.rows();
    QMatrix AW(n, W.size());
    for (size_t c = 0; c < W.size(); ++c) {
        QVec img = A.apply(W[c]);
        for (size_t i = 0; i < n; ++i) AW(i, c) = img[i];
    }
    std::vector<QVec> out;
    for (const auto& k : kernel(AW)) {
        QVec v(n, QuadExtElem(0));
        for (size_t c = 0; c < W.size(); ++c)
            if (!k[c].is_zero())
                for (size_t i = 0; i < n; ++i) v[i] += k[c] * W[c][i];
        out.push_back(std::move(v));
    }
    return out;
}

inline Integer field_of(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_rational()) return x.disc();
    return 1;
}

}  // namespace detail

/// Scales v to coordinates in Z[sqrt(D)] with no common rational integer
/// factor and first nonzero entry having positive leading coordinate.
inline QVec normalize_eigenvector(const QVec& v) {
    Integer den = 1;
    for (const auto& x : v) {
        den = lcm(den, x.rational_part().get_den());
        den = lcm(den, x.surd_part().get_den());
    }
    Integer g = 0;
    for (const auto& x : v) {
        g = gcd(g, Integer(x.rational_part() * den));
        g = gcd(g, Integer(x.surd_part() * den));
    }
    if (g == 0) throw PreconditionError("spectra", "zero eigenvector");
    Rational s(den, g);
    s.canonicalize();
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        bool neg = x.rational_part() != 0 ? x.rational_part() < 0 : x.surd_part() < 0;
        if (neg) s = -s;
        break;
    }
    QVec out;
    for (const auto& x : v) out.push_back(x * QuadExtElem(s));
    return out;
}

/// Simultaneous eigen-decomposition of commuting integer matrices.
inline EigenSystem eigensystem(const std::vector<HeckeMatrix>& ops) {
    if (ops.empty()) throw PreconditionError("spectra", "no operators given");
    EigenSystem E;
    E.h = ops.front().size();
    for (const auto& T : ops) {
        if (T.size() != E.h) throw PreconditionError("spectra", "operators have different sizes");
        E.operators.push_back(prime_label(T.prime));
        E.matrices.push_back(T.entries);
    }
    for (size_t a = 0; a < ops.size(); ++a)
        for (size_t b = a + 1; b < ops.size(); ++b)
            if (!(E.matrices[a] * E.matrices[b] == E.matrices[b] * E.matrices[a]))
                throw PreconditionError("spectra", "operators " + E.operators[a] + " and " + E.operators[b] +
                                                       " do not commute");
    const size_t n = E.h;
    std::vector<QVec> full;
    for (size_t i = 0; i < n; ++i) {
        QVec e(n, QuadExtElem(0));
        e[i] = 1;
        full.push_back(e);
    }
    std::vector<EigenSpace> spaces{EigenSpace{{}, {}, full, 1}};
    for (size_t k = 0; k < ops.size(); ++k) {
        const IntMatrix& T = E.matrices[k];
        Integer bound = 0;
        for (size_t i = 0; i < n; ++i) {
            Integer s = 0;
            for (size_t j = 0; j < n; ++j) s += abs(T(i, j));
            bound = std::max(bound, s);
        }
        PolynomialRoots pr = roots_of(charpoly(T), bound);
        QMatrix Tq = detail::to_quadratic(T);
        std::vector<EigenSpace> next;
        for (const auto& W : spaces) {
            size_t got = 0;
            for (const auto& [mu, mult] : pr.roots) {
                QMatrix A = Tq;
                for (size_t i = 0; i < n; ++i) A(i, i) -= mu;
                auto V = detail::intersect_kernel(A, W.basis);
                if (V.empty()) continue;
                got += V.size();
                EigenSpace S = W;
                S.eigenvalues.push_back(mu);
                S.basis = V;
                next.push_back(std::move(S));
            }
            if (got != W.dim())
                throw InvariantViolation("spectra", "operator " + E.operators[k] + " is not diagonalizable on a common eigenspace");
        }
        spaces = std::move(next);
    }
    for (auto& S : spaces) {
        for (auto& v : S.basis) v = normalize_eigenvector(v);
        S.field = 1;
        for (const auto& mu : S.eigenvalues)
            if (!mu.is_rational()) S.field = mu.disc();
        for (const auto& v : S.basis)
            if (detail::field_of(v) != 1) S.field = detail::field_of(v);
    }
    // default order: decreasing eigenvalues, operator by operator
    std::stable_sort(spaces.begin(), spaces.end(), [](const EigenSpace& x, const EigenSpace& y) {
        for (size_t k = 0; k < x.eigenvalues.size(); ++k) {
            double a = x.eigenvalues[k].approx(), b = y.eigenvalues[k].approx();
            if (a != b) return a > b;
        }
        return false;
    });
    int next_label = 1;
    for (auto& S : spaces) {
        S.labels.clear();
        for (size_t k = 0; k < S.dim(); ++k) S.labels.push_back(next_label++);
    }
    E.spaces = std::move(spaces);
    return E;
}

/// A row of a reference eigenvalue table: label and one eigenvalue per operator.
struct EigenvalueRow {
    int label = 0;
    QVec eigenvalues;
    std::string parameter;
};

struct EigenvalueTable {
    std::vector<std::string> operators;
    std::vector<EigenvalueRow> rows;
};

inline EigenvalueTable eigenvalue_table_from_json(const nlohmann::json& j) {
    EigenvalueTable t;
    t.operators = j.at("operators").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        EigenvalueRow row;
        row.label = r.at("label").get<int>();
        for (const char* key : {"T2", "T3"}) {
            if (!r.contains(key)) continue;
            row.eigenvalues.push_back(parse_quadratic(r.at(key).get<std::string>()));
        }
        row.parameter = r.value("parameter", "");
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline EigenvalueTable load_eigenvalue_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("spectra", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    return eigenvalue_table_from_json(j);
}

/// Relabels the spaces of E so that each carries the labels of the table rows
/// with the same eigenvalues. Throws if the spectra differ.
inline void label_by_table(EigenSystem& E, const EigenvalueTable& table) {
    if (table.operators.size() != E.operators.size())
        throw PreconditionError("spectra", "table and eigensystem have different operators");
    for (size_t k = 0; k < E.operators.size(); ++k)
        if (table.operators[k] != E.operators[k])
            throw PreconditionError("spectra", "operator order differs from the table: " + table.operators[k]);
    std::vector<bool> used(table.rows.size(), false);
    for (auto& S : E.spaces) {
        std::vector<int> labels;
        for (size_t r = 0; r < table.rows.size() && labels.size() < S.dim(); ++r) {
            if (used[r] || table.rows[r].eigenvalues != S.eigenvalues) continue;
            used[r] = true;
            labels.push_back(table.rows[r].label);
        }
        if (labels.size() != S.dim()) {
            std::string ev;
            for (const auto& x : S.eigenvalues) ev += " " + x.str();
            throw InvariantViolation("spectra", "eigenvalues" + ev + " do not match the table");
        }
        S.labels = labels;
    }
    std::sort(E.spaces.begin(), E.spaces.end(),
              [](const EigenSpace& x, const EigenSpace& y) { return x.labels.front() < y.labels.front(); });
}

/// Coefficients of v in the basis of all stored eigenvectors.
struct Expansion {
    std::vector<int> labels;
    QVec coefficients;          // one per label
    std::vector<QVec> projections;  // component of v in each space
};

/// Inverse of the eigenvector matrix, cached for repeated expansions.
class EigenBasis {
public:
    explicit EigenBasis(const EigenSystem& E) : E_(&E) {
        const size_t n = E.h;
        QMatrix B(n, n);
        size_t c = 0;
        for (const auto& S : E.spaces)
            for (size_t k = 0; k < S.dim(); ++k) {
                labels_.push_back(S.labels[k]);
                space_.push_back(&S - E.spaces.data());
                for (size_t i = 0; i < n; ++i) B(i, c) = S.basis[k][i];
                ++c;
            }
        if (c != n) throw InvariantViolation("spectra", "eigenvectors do not span");
        inv_ = inverse(B);
    }

    Expansion expand(const QVec& v) const {
        const size_t n = E_->h;
        if (v.size() != n) throw PreconditionError("spectra", "vector length mismatch");
        Expansion out;
        out.labels = labels_;
        out.coefficients = inv_.apply(v);
        out.projections.assign(E_->spaces.size(), QVec(n, QuadExtElem(0)));
        size_t c = 0;
        for (size_t s = 0; s < E_->spaces.size(); ++s)
            for (size_t k = 0; k < E_->spaces[s].dim(); ++k, ++c) {
                const QuadExtElem& a = out.coefficients[c];
                if (a.is_zero()) continue;
                for (size_t i = 0; i < n; ++i) out.projections[s][i] += a * E_->spaces[s].basis[k][i];
            }
        return out;
    }

private:
    const EigenSystem* E_;
    std::vector<int> labels_;
    std::vector<size_t> space_;
    QMatrix inv_;
};

inline Expansion expand_in_eigenbasis(const QVec& v, const EigenSystem& E) { return EigenBasis(E).expand(v); }

inline Expansion expand_in_eigenbasis(const std::vector<Integer>& v, const EigenSystem& E) {
    QVec q;
    for (const auto& x : v) q.emplace_back(x);
    return expand_in_eigenbasis(q, E);
}

/// (T - lambda I) v = 0 for every stored operator and basis vector.
inline bool check_eigensystem(const EigenSystem& E) {
    for (size_t k = 0; k < E.matrices.size(); ++k) {
        QMatrix T = detail::to_quadratic(E.matrices[k]);
        for (const auto& S : E.spaces)
            for (const auto& v : S.basis) {
                QVec tv = T.apply(v);
                for (size_t i = 0; i < v.size(); ++i)
                    if (tv[i] != S.eigenvalues[k] * v[i]) return false;
            }
    }
    return true;
}

inline nlohmann::json to_json(const EigenSystem& E) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& S : E.spaces)
        for (size_t k = 0; k < S.dim(); ++k) {
            nlohmann::json r;
            r["label"] = S.labels[k];
            for (size_t o = 0; o < E.operators.size(); ++o) r["eigenvalues"][E.operators[o]] = S.eigenvalues[o].str();
            r["field"] = S.field.get_str();
            r["eigenspace_dim"] = S.dim();
            nlohmann::json v = nlohmann::json::array();
            for (const auto& x : S.basis[k]) v.push_back(x.str());
            r["eigenvector"] = v;
            rows.push_back(r);
        }
    return {{"operators", E.operators}, {"size", E.h}, {"rows", rows}};
}

/// Reads the output of to_json back; rows of one eigenspace are adjacent.
inline EigenSystem eigensystem_from_json(const nlohmann::json& j) {
    EigenSystem E;
    E.operators = j.at("operators").get<std::vector<std::string>>();
    E.h = j.at("size").get<size_t>();
    size_t remaining = 0;
    for (const auto& r : j.at("rows")) {
        QVec ev;
        for (const auto& op : E.operators) ev.push_back(parse_quadratic(r.at("eigenvalues").at(op).get<std::string>()));
        QVec v;
        for (const auto& x : r.at("eigenvector")) v.push_back(parse_quadratic(x.get<std::string>()));
        if (v.size() != E.h) throw PreconditionError("spectra", "eigenvector has the wrong length");
        if (remaining == 0) {
            EigenSpace S;
            S.eigenvalues = ev;
            S.field = Integer(r.value("field", "1"));
            E.spaces.push_back(std::move(S));
            remaining = r.value("eigenspace_dim", size_t{1});
        } else if (E.spaces.back().eigenvalues != ev) {
            throw PreconditionError("spectra", "rows of a common eigenspace disagree on eigenvalues");
        }
        E.spaces.back().labels.push_back(r.at("label").get<int>());
        E.spaces.back().basis.push_back(std::move(v));
        --remaining;
    }
    if (remaining) throw PreconditionError("spectra", "truncated eigenspace in input");
    return E;
}

}  // namespace eisen
