#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "eisenhecke/core/ideal.hpp"
#include "eisenhecke/lattice/normal_form.hpp"
#include "json.hpp"

namespace eisen {

using Eis64Matrix = Matrix<Eis64>;

inline EisQMatrix to_field(const EisMatrix& m) {
    return m.map([](const EisInt& x) { return to_field(x); });
}

inline bool is_integral(const EisQMatrix& m) {
    for (const auto& x : m.data())
        if (!is_integral(x)) return false;
    return true;
}

inline EisMatrix to_integral(const EisQMatrix& m) {
    return m.map([](const EisQ& x) { return to_integral(x); });
}

inline bool is_hermitian(const EisQMatrix& g) { return g.square() && adjoint(g) == g; }

/// A full Z[w]-lattice in E^n.
///
/// The ambient space carries the Hermitian form <v,w> = v^dagger A w; the
/// standard space has A = I. Columns of the basis matrix are the generators,
/// and the Gram matrix B^dagger A B is cached. Lattices read from a bare Gram
/// matrix live in their own ambient space (A = gram, B = I).
class HermitianLattice {
public:
    HermitianLattice() = default;

    HermitianLattice(EisQMatrix form, EisQMatrix basis) : form_(std::move(form)), basis_(std::move(basis)) {
        if (!form_.square() || !basis_.square() || form_.rows() != basis_.rows())
            throw PreconditionError("lattice", "basis and form must be square of equal size");
        if (!is_hermitian(form_)) throw PreconditionError("lattice", "ambient form is not Hermitian");
        gram_ = adjoint(basis_) * form_ * basis_;
        if (rank() > 0 && is_zero(determinant(gram_))) throw PreconditionError("lattice", "basis is degenerate");
    }

    static HermitianLattice standard(size_t n) {
        return {EisQMatrix::identity(n), EisQMatrix::identity(n)};
    }

    static HermitianLattice from_gram(const EisQMatrix& gram) {
        if (!is_hermitian(gram)) throw PreconditionError("lattice", "Gram matrix is not Hermitian");
        return {gram, EisQMatrix::identity(gram.rows())};
    }
    static HermitianLattice from_gram(const EisMatrix& gram) { return from_gram(to_field(gram)); }

    /// Sublattice or overlattice given by coordinates relative to this basis.
    HermitianLattice with_coordinates(const EisQMatrix& coords) const { return {form_, basis_ * coords}; }

    size_t rank() const { return basis_.rows(); }
    const EisQMatrix& form() const { return form_; }
    const EisQMatrix& basis() const { return basis_; }
    const EisQMatrix& gram() const { return gram_; }

    bool is_integral() const { return eisen::is_integral(gram_); }

    EisMatrix integral_gram() const {
        if (!is_integral()) throw PreconditionError("lattice", "lattice is not integral");
        return to_integral(gram_);
    }

    Eis64Matrix gram64() const {
        return integral_gram().map([](const EisInt& x) { return to_small(x); });
    }

    /// Positive definiteness via the Hermitian determinant criterion on
    /// leading minors (determinants of Hermitian matrices are rational).
    bool is_positive_definite() const {
        for (size_t k = 1; k <= rank(); ++k) {
            EisQMatrix m(k, k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) m(i, j) = gram_(i, j);
            EisQ d = determinant(m);
            if (d.b != 0 || d.a <= 0) return false;
        }
        return true;
    }

    /// Scales the lattice by s (basis columns multiplied by s).
    HermitianLattice scaled(const EisQ& s) const { return {form_, EisQ(s) * basis_}; }

    bool same_ambient(const HermitianLattice& o) const { return form_ == o.form_; }

private:
    EisQMatrix form_;
    EisQMatrix basis_;
    EisQMatrix gram_;
};

/// Dual lattice L^# = {v : <v, L> in Z[w]}; basis B * G^{-1}.
inline HermitianLattice dual(const HermitianLattice& L) {
    if (L.rank() == 0) return L;
    return L.with_coordinates(inverse(L.gram()));
}

/// Coordinates of the basis of L relative to the basis of M.
inline EisQMatrix relative_coordinates(const HermitianLattice& M, const HermitianLattice& L) {
    if (!M.same_ambient(L) || M.rank() != L.rank())
        throw PreconditionError("lattice", "lattices live in different ambient spaces");
    return inverse(M.basis()) * L.basis();
}

/// Canonical Z-Hermite form of the rank-2n Z-lattice underlying L, scaled to
/// integers by the given denominator. Two lattices in the same ambient space
/// are equal iff their keys agree for a common denominator.
inline IntMatrix canonical_key(const EisQMatrix& basis, const Integer& den) {
    size_t n = basis.rows();
    IntMatrix rows(2 * n, 2 * n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            EisQ x = basis(i, j) * EisQ(den, 0);
            EisQ wx = x * EisQ(0, 1);
            EisInt xi = to_integral(x), wi = to_integral(wx);
            rows(2 * j, 2 * i) = xi.a;
            rows(2 * j, 2 * i + 1) = xi.b;
            rows(2 * j + 1, 2 * i) = wi.a;
            rows(2 * j + 1, 2 * i + 1) = wi.b;
        }
    }
    return integer_hnf(rows);
}

inline Integer common_denominator(const EisQMatrix& m) {
    Integer d = 1;
    for (const auto& x : m.data()) d = lcm(d, lcm(x.a.get_den(), x.b.get_den()));
    return d;
}

inline bool same_lattice(const HermitianLattice& L1, const HermitianLattice& L2) {
    if (!L1.same_ambient(L2) || L1.rank() != L2.rank()) return false;
    Integer d = lcm(common_denominator(L1.basis()), common_denominator(L2.basis()));
    return canonical_key(L1.basis(), d) == canonical_key(L2.basis(), d);
}

/// Basis of the Z[w]-span of the given generator columns (coordinates over E).
inline EisQMatrix span_basis(const EisQMatrix& gens) {
    Integer d = common_denominator(gens);
    EisMatrix scaled = gens.map([&](const EisQ& x) { return to_integral(x * EisQ(d, 0)); });
    EisMatrix b = column_basis(scaled);
    EisQ inv(Rational(1, 1) / Rational(d), 0);
    return to_field(b).map([&](const EisQ& x) { return x * inv; });
}

inline HermitianLattice direct_sum(const HermitianLattice& L, const HermitianLattice& M) {
    size_t n = L.rank(), m = M.rank();
    EisQMatrix f(n + m, n + m), b(n + m, n + m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            f(i, j) = L.form()(i, j);
            b(i, j) = L.basis()(i, j);
        }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            f(n + i, n + j) = M.form()(i, j);
            b(n + i, n + j) = M.basis()(i, j);
        }
    return {f, b};
}

// ---- JSON ----

inline nlohmann::json eis_to_json(const EisInt& x) { return nlohmann::json::array({x.a.get_si(), x.b.get_si()}); }

inline EisInt eis_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_eisenstein(j.get<std::string>());
    if (j.is_number_integer()) return EisInt{Integer(j.get<long>()), 0};
    if (!j.is_array() || j.size() != 2) throw PreconditionError("lattice", "expected [a,b] for a+b*w");
    auto part = [](const nlohmann::json& v) {
        if (v.is_string()) return Integer(v.get<std::string>());
        return Integer(v.get<long>());
    };
    return {part(j[0]), part(j[1])};
}

inline nlohmann::json lattice_to_json(const HermitianLattice& L) {
    nlohmann::json out;
    out["rank"] = L.rank();
    nlohmann::json g = nlohmann::json::array();
    EisMatrix gram = L.integral_gram();
    for (size_t i = 0; i < L.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < L.rank(); ++j) row.push_back(eis_to_json(gram(i, j)));
        g.push_back(row);
    }
    out["gram"] = g;
    if (L.form() == EisQMatrix::identity(L.rank())) {
        Integer d = common_denominator(L.basis());
        nlohmann::json b = nlohmann::json::array();
        for (size_t i = 0; i < L.rank(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t j = 0; j < L.rank(); ++j) row.push_back(eis_to_json(to_integral(L.basis()(i, j) * EisQ(d, 0))));
            b.push_back(row);
        }
        out["basis"] = b;
        out["denominator"] = d.get_si();
    }
    return out;
}

inline HermitianLattice lattice_from_json(const nlohmann::json& j) {
    size_t n = j.at("rank").get<size_t>();
    auto read = [&](const nlohmann::json& rows) {
        if (rows.size() != n) throw PreconditionError("lattice", "matrix does not match rank");
        EisMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw PreconditionError("lattice", "matrix does not match rank");
            for (size_t k = 0; k < n; ++k) m(i, k) = eis_from_json(rows[i][k]);
        }
        return m;
    };
    EisMatrix gram = read(j.at("gram"));
    if (j.contains("basis")) {
        Integer d = j.value("denominator", 1L);
        EisQMatrix b = to_field(read(j.at("basis"))).map([&](const EisQ& x) {
            return EisQ(x.a / Rational(d), x.b / Rational(d));
        });
        HermitianLattice L(EisQMatrix::identity(n), b);
        if (L.gram() != to_field(gram)) throw InvariantViolation("lattice", "stored Gram does not match basis");
        return L;
    }
    return HermitianLattice::from_gram(gram);
}

inline HermitianLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("lattice", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    return lattice_from_json(j);
}

inline void save_lattice(const HermitianLattice& L, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("lattice", "cannot write " + path);
    out << lattice_to_json(L).dump(1) << "\n";
}

}  // namespace eisen
