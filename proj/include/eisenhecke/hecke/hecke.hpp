#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "eisenhecke/neighbour/genus.hpp"

namespace eisen {

/// Short name of a prime ideal that parse_prime_ideal reads back.
inline std::string prime_label(const EisIdeal& P) {
    if (P.split_type == SplitType::inert) return P.p.get_str();
    if (P.split_type == SplitType::ramified) return "sqrt(-3)";
    return to_string(P.generator);
}

/// A Hecke operator on functions on the class set, as a matrix acting on the
/// basis of class indicator functions.
struct HeckeMatrix {
    EisIdeal prime;
    IntMatrix entries;
    std::string method;  // direct, intertwining, fixture
    std::vector<Integer> aut_orders;  // may be empty

    size_t size() const { return entries.rows(); }

    /// Common row sum, or nullopt if rows differ.
    std::optional<Integer> row_sum() const {
        std::optional<Integer> s;
        for (size_t i = 0; i < size(); ++i) {
            Integer r = 0;
            for (size_t j = 0; j < size(); ++j) r += entries(i, j);
            if (s && *s != r) return std::nullopt;
            s = r;
        }
        return s;
    }

    /// t_ij / aut_i == t_ji / aut_j for all i, j.
    bool weighted_symmetric(const std::vector<Integer>& aut) const {
        if (aut.size() != size()) throw PreconditionError("hecke", "automorphism list has the wrong length");
        for (size_t i = 0; i < size(); ++i)
            for (size_t j = 0; j < size(); ++j)
                if (entries(i, j) * aut[j] != entries(j, i) * aut[i]) return false;
        return true;
    }
};

inline nlohmann::json to_json(const HeckeMatrix& h) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < h.size(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (size_t j = 0; j < h.size(); ++j) {
            const Integer& v = h.entries(i, j);
            if (v.fits_slong_p()) r.push_back(v.get_si());
            else r.push_back(v.get_str());
        }
        rows.push_back(r);
    }
    nlohmann::json j{{"prime", prime_label(h.prime)}, {"size", h.size()}, {"rows", rows}, {"method", h.method}};
    if (!h.aut_orders.empty()) {
        j["aut_orders"] = nlohmann::json::array();
        for (const auto& a : h.aut_orders) j["aut_orders"].push_back(a.get_str());
    }
    return j;
}

inline Integer integer_from_json(const nlohmann::json& v) {
    if (v.is_string()) return Integer(v.get<std::string>());
    if (v.is_number_integer()) return Integer(static_cast<long>(v.get<int64_t>()));
    throw PreconditionError("hecke", "expected an integer entry");
}

inline HeckeMatrix hecke_from_json(const nlohmann::json& j) {
    HeckeMatrix h;
    h.prime = parse_prime_ideal(j.at("prime").get<std::string>());
    h.method = j.value("method", "fixture");
    size_t n = j.at("size").get<size_t>();
    const auto& rows = j.at("rows");
    if (rows.size() != n) throw PreconditionError("hecke", "row count does not match size");
    h.entries = IntMatrix(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw PreconditionError("hecke", "row length does not match size");
        for (size_t k = 0; k < n; ++k) h.entries(i, k) = integer_from_json(rows[i][k]);
    }
    if (j.contains("aut_orders"))
        for (const auto& a : j["aut_orders"]) h.aut_orders.push_back(integer_from_json(a));
    return h;
}

inline HeckeMatrix load_hecke(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("hecke", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    return hecke_from_json(j);
}

struct HeckeOptions {
    /// Accept a unique fingerprint match inside a closed genus without search.
    bool trust_unique_fingerprint = true;
    std::function<void(const std::string&)> progress;
};

namespace detail {

inline ClassRegistry registry_for(const GenusEnumeration& g) {
    ClassRegistry reg(g.fingerprint_norm);
    for (size_t i = 0; i < g.size(); ++i) reg.add(g.representatives[i], g.fingerprints[i]);
    return reg;
}

inline std::string orphan_message(const HermitianLattice& N, const Fingerprint& fp) {
    return "neighbour matches no class of the genus (" + fp.str() + "): " + lattice_to_json(N).dump();
}

}  // namespace detail

/// t_ij = number of P-neighbours of L_i isometric to L_j, summed over line
/// orbits of Aut(L_i).
inline HeckeMatrix hecke_direct(GenusEnumeration& genus, const EisIdeal& P, const HeckeOptions& opt = {}) {
    ensure_automorphisms(genus);
    const size_t h = genus.size();
    ClassRegistry reg = detail::registry_for(genus);
    bool trust = opt.trust_unique_fingerprint && genus.closed;
    HeckeMatrix out{P, IntMatrix(h, h), "direct", genus.aut_orders};
    for (size_t i = 0; i < h; ++i) {
        const HermitianLattice& L = genus.representatives[i];
        check_neighbour_preconditions(L, P);
        LineContext ctx(L.gram64(), P);
        LineOrbits orbits = admissible_line_orbits(ctx, genus.automorphisms[i].generators);
        if (opt.progress)
            opt.progress("row " + std::to_string(i + 1) + ": " + std::to_string(orbits.sizes.size()) + " line orbits");
        for (size_t k = 0; k < orbits.sizes.size(); ++k) {
            LineNeighbours ln = neighbours_of_line(ctx, orbits.representatives[k]);
            for (const auto& c : ln.neighbours) {
                HermitianLattice N = L.with_coordinates(c);
                Eis64Matrix gn = N.gram64();
                Fingerprint fp = reg.fingerprint_for(gn);
                auto j = reg.find(gn, fp, trust);
                if (!j) throw InvariantViolation("hecke", detail::orphan_message(N, fp));
                out.entries(i, *j) += static_cast<unsigned long>(orbits.sizes[k]);
            }
        }
    }
    return out;
}

/// Data of the intertwining construction: S counts the sublattices L_x of
/// each L_i by class, S' is derived from S by automorphism weighting.
struct IntertwiningData {
    IntMatrix S;
    RatMatrix S_prime;
    Integer d;
    std::vector<Integer> aut_L;
    std::vector<Integer> aut_L_prime;
};

/// Sublattice classes L_j' and the incidence matrix S.
struct SublatticeGenus {
    GenusEnumeration classes;  // representatives of genus(L cap N')
    IntMatrix S;
    Integer d;
};

inline SublatticeGenus sublattice_genus(GenusEnumeration& genus, const EisIdeal& P, const HeckeOptions& opt = {}) {
    if (P.split_type == SplitType::split)
        throw UnsupportedCaseError("hecke", "the intertwining method needs an inert or ramified prime");
    ensure_automorphisms(genus);
    const size_t h = genus.size();
    SublatticeGenus out;
    out.classes.prime = P;
    out.classes.fingerprint_norm = genus.fingerprint_norm;
    ClassRegistry reg(genus.fingerprint_norm);
    std::vector<std::map<size_t, uint64_t>> counts(h);
    for (size_t i = 0; i < h; ++i) {
        const HermitianLattice& L = genus.representatives[i];
        check_neighbour_preconditions(L, P);
        LineContext ctx(L.gram64(), P);
        LineOrbits orbits = admissible_line_orbits(ctx, genus.automorphisms[i].generators);
        if (i == 0) out.d = static_cast<unsigned long>(orbits.line_count);
        else if (out.d != static_cast<unsigned long>(orbits.line_count))
            throw InvariantViolation("hecke", "number of admissible lines differs between classes");
        for (size_t k = 0; k < orbits.sizes.size(); ++k) {
            const auto& line = orbits.representatives[k];
            if (count_lifts(ctx, line) == 0) throw InvariantViolation("hecke", "admissible line without neighbours");
            LineNeighbours ln = neighbours_of_line(ctx, line);
            HermitianLattice M = L.with_coordinates(ln.intersection);
            Eis64Matrix gm = M.gram64();
            Fingerprint fp = reg.fingerprint_for(gm);
            auto j = reg.find(gm, fp);
            if (!j) {
                HermitianLattice R = reduce_lattice(M);
                j = reg.add(R, fp);
                out.classes.representatives.push_back(R);
                out.classes.fingerprints.push_back(fp);
                out.classes.discovery_log.push_back({i, *j, line, true});
            }
            counts[i][*j] += orbits.sizes[k];
        }
        if (opt.progress)
            opt.progress("row " + std::to_string(i + 1) + ": " + std::to_string(orbits.sizes.size()) +
                         " line orbits, " + std::to_string(reg.size()) + " sublattice classes");
    }
    out.classes.closed = true;
    const size_t hp = reg.size();
    out.S = IntMatrix(h, hp);
    for (size_t i = 0; i < h; ++i)
        for (const auto& [j, c] : counts[i]) out.S(i, j) = static_cast<unsigned long>(c);
    // d counted as distinct intersections must equal every row sum of S
    for (size_t i = 0; i < h; ++i) {
        Integer r = 0;
        for (size_t j = 0; j < hp; ++j) r += out.S(i, j);
        if (r != out.d) throw InvariantViolation("hecke", "row " + std::to_string(i + 1) + " of S sums to " + r.get_str() +
                                                              ", expected d = " + out.d.get_str());
    }
    ensure_automorphisms(out.classes);
    return out;
}

/// S' = diag(aut_L') S^t diag(aut_L)^{-1}.
inline RatMatrix sprime_from_s(const IntMatrix& S, const std::vector<Integer>& aut_L, const std::vector<Integer>& aut_Lp) {
    if (aut_L.size() != S.rows() || aut_Lp.size() != S.cols())
        throw PreconditionError("hecke", "automorphism lists do not match the matrix shape");
    RatMatrix out(S.cols(), S.rows());
    for (size_t j = 0; j < S.cols(); ++j)
        for (size_t i = 0; i < S.rows(); ++i) out(j, i) = Rational(aut_Lp[j] * S(i, j)) / Rational(aut_L[i]);
    return out;
}

inline bool is_integer_matrix(const RatMatrix& m) {
    for (const auto& x : m.data())
        if (x.get_den() != 1) return false;
    return true;
}

inline IntMatrix to_integer_matrix(const RatMatrix& m) {
    if (!is_integer_matrix(m)) throw InvariantViolation("hecke", "matrix is not integral");
    return m.map([](const Rational& x) { return Integer(x.get_num()); });
}

inline IntMatrix intertwining_product(const IntMatrix& S, const IntMatrix& Sp, const Integer& d) {
    IntMatrix T = S * Sp;
    for (size_t i = 0; i < T.rows(); ++i) T(i, i) -= d;
    return T;
}

struct IntertwiningResult {
    HeckeMatrix T;
    IntertwiningData data;
    SublatticeGenus sublattices;
};

/// T = S S' - d I.
inline IntertwiningResult hecke_intertwining(GenusEnumeration& genus, const EisIdeal& P, const HeckeOptions& opt = {}) {
    SublatticeGenus sub = sublattice_genus(genus, P, opt);
    IntertwiningData data{sub.S, {}, sub.d, genus.aut_orders, sub.classes.aut_orders};
    data.S_prime = sprime_from_s(sub.S, data.aut_L, data.aut_L_prime);
    if (!is_integer_matrix(data.S_prime))
        throw InvariantViolation("hecke", "S' is not integral; automorphism orders or sublattice classes are inconsistent");
    IntMatrix T = intertwining_product(sub.S, to_integer_matrix(data.S_prime), sub.d);
    return {HeckeMatrix{P, T, "intertwining", genus.aut_orders}, std::move(data), std::move(sub)};
}

/// Inversion of the S' relation, with the checks of the intertwining method.
struct ReconstructionReport {
    RatMatrix S;
    bool integral = false;
    std::vector<Rational> row_sums;
    std::optional<Integer> d;  // common row sum when integral and constant
    std::optional<IntMatrix> T;
};

inline ReconstructionReport reconstruct_S_from_Sprime(const RatMatrix& Sp, const std::vector<Integer>& aut_L,
                                                      const std::vector<Integer>& aut_Lp) {
    if (Sp.cols() != aut_L.size() || Sp.rows() != aut_Lp.size())
        throw PreconditionError("hecke", "automorphism lists do not match the matrix shape");
    ReconstructionReport r;
    r.S = RatMatrix(Sp.cols(), Sp.rows());
    for (size_t i = 0; i < Sp.cols(); ++i)
        for (size_t j = 0; j < Sp.rows(); ++j) r.S(i, j) = Rational(aut_L[i]) * Sp(j, i) / Rational(aut_Lp[j]);
    r.integral = is_integer_matrix(r.S);
    for (size_t i = 0; i < r.S.rows(); ++i) {
        Rational s = 0;
        for (size_t j = 0; j < r.S.cols(); ++j) s += r.S(i, j);
        r.row_sums.push_back(s);
    }
    if (!r.integral) return r;
    bool constant = std::all_of(r.row_sums.begin(), r.row_sums.end(), [&](const Rational& x) { return x == r.row_sums[0]; });
    if (constant && !r.row_sums.empty()) {
        r.d = Integer(r.row_sums[0].get_num());
        if (is_integer_matrix(Sp)) r.T = intertwining_product(to_integer_matrix(r.S), to_integer_matrix(Sp), *r.d);
    }
    return r;
}

}  // namespace eisen
