#pragma once

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "eisenhecke/arthur/eigenvalues.hpp"
#include "eisenhecke/hecke/hecke.hpp"
#include "eisenhecke/spectra/congruences.hpp"

#ifndef EISENHECKE_DATA_DIR
#define EISENHECKE_DATA_DIR "data"
#endif

namespace eisen {

/// Directory of the shipped fixtures; EISENHECKE_FIXTURES overrides it.
inline std::string fixture_dir() {
    if (const char* env = std::getenv("EISENHECKE_FIXTURES"); env && *env) return env;
    return std::string(EISENHECKE_DATA_DIR) + "/fixtures";
}

inline nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("workbench", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError("workbench", path + ": " + e.what());
    }
    return j;
}

inline void write_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("workbench", "cannot write " + path);
    out << j.dump(1) << "\n";
}

struct CongruenceEntry {
    int i = 0, j = 0;
    CongruenceModulus modulus;
};

struct FixtureSet {
    HeckeMatrix t2;       // 20 x 20, rank-12 unimodular genus
    HeckeMatrix t3;       // 20 x 20, same genus, prime sqrt(-3)
    HeckeMatrix t2_5x5;   // sqrt(-3)-modular genus
    RatMatrix sprime2;    // 25 x 5
    std::vector<Integer> aut_L, aut_L_prime;
    EigenvalueTable table;
    CoefficientStore store;
    Integer q_min = 11;
    std::vector<CongruenceEntry> proved, candidates;
};

namespace detail {

inline std::vector<Integer> integer_list(const nlohmann::json& j) {
    std::vector<Integer> out;
    for (const auto& v : j) out.push_back(integer_from_json(v));
    return out;
}

inline std::vector<CongruenceEntry> congruence_list(const nlohmann::json& j) {
    std::vector<CongruenceEntry> out;
    for (const auto& e : j)
        out.push_back({e.at(0).get<int>(), e.at(1).get<int>(), parse_modulus(e.at(2).get<std::string>())});
    return out;
}

}  // namespace detail

inline FixtureSet load_fixtures(const std::string& dir = fixture_dir()) {
    FixtureSet F;
    F.t2 = hecke_from_json(read_json(dir + "/t2_unimodular.json"));
    F.t3 = hecke_from_json(read_json(dir + "/t3_unimodular.json"));
    F.t2_5x5 = hecke_from_json(read_json(dir + "/t2_eisenstein.json"));
    auto sp = read_json(dir + "/sprime2_eisenstein.json");
    const auto& rows = sp.at("rows");
    size_t cols = rows.empty() ? 0 : rows[0].size();
    F.sprime2 = RatMatrix(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw PreconditionError("workbench", "S' row " + std::to_string(i + 1) + " has the wrong length");
        for (size_t j = 0; j < cols; ++j) F.sprime2(i, j) = Rational(integer_from_json(rows[i][j]));
    }
    F.aut_L = detail::integer_list(sp.at("aut_L"));
    F.aut_L_prime = detail::integer_list(sp.at("aut_L_prime"));
    F.table = eigenvalue_table_from_json(read_json(dir + "/eigenvalues.json"));
    F.store = store_from_json(read_json(dir + "/coefficients.json"));
    extend_with_tau(F.store, 97);
    auto cg = read_json(dir + "/congruences.json");
    F.q_min = cg.value("q_min", 11);
    F.proved = detail::congruence_list(cg.at("proved"));
    F.candidates = detail::congruence_list(cg.value("candidates", nlohmann::json::array()));
    return F;
}

struct ChecksumItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ChecksumReport {
    std::vector<ChecksumItem> items;
    bool ok() const {
        return std::all_of(items.begin(), items.end(), [](const ChecksumItem& c) { return c.ok; });
    }
};

namespace detail {

inline ChecksumItem row_sum_check(const std::string& name, const IntMatrix& m, const Integer& expected) {
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer s = 0;
        for (size_t j = 0; j < m.cols(); ++j) s += m(i, j);
        if (s != expected)
            return {name, false, "row " + std::to_string(i + 1) + " sums to " + s.get_str() + ", expected " + expected.get_str()};
    }
    return {name, true, "all rows sum to " + expected.get_str()};
}

}  // namespace detail

/// Transcription checks: row sums against the first table row, commutation,
/// S' row sums, list lengths and weighted symmetry of the 5 x 5 matrix.
inline ChecksumReport fixture_checksum(const FixtureSet& F) {
    ChecksumReport r;
    if (F.table.rows.empty() || F.table.rows[0].eigenvalues.size() < 2) {
        r.items.push_back({"eigenvalue table", false, "missing first row"});
        return r;
    }
    Integer e2 = F.table.rows[0].eigenvalues[0].rational_part().get_num();
    Integer e3 = F.table.rows[0].eigenvalues[1].rational_part().get_num();
    r.items.push_back(detail::row_sum_check("T2 row sums", F.t2.entries, e2));
    r.items.push_back(detail::row_sum_check("T3 row sums", F.t3.entries, e3));
    {
        ChecksumItem c{"T2 T3 = T3 T2", true, "matrices commute"};
        if (F.t2.size() != F.t3.size()) {
            c = {"T2 T3 = T3 T2", false, "sizes differ"};
        } else {
            IntMatrix a = F.t2.entries * F.t3.entries, b = F.t3.entries * F.t2.entries;
            for (size_t i = 0; i < a.rows() && c.ok; ++i)
                for (size_t j = 0; j < a.cols(); ++j)
                    if (a(i, j) != b(i, j)) {
                        c = {"T2 T3 = T3 T2", false,
                             "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + a(i, j).get_str() +
                                 " vs " + b(i, j).get_str()};
                        break;
                    }
        }
        r.items.push_back(c);
    }
    {
        ChecksumItem c{"S' row sums", true, "every row sums to 3"};
        for (size_t i = 0; i < F.sprime2.rows(); ++i) {
            Rational s = 0;
            for (size_t j = 0; j < F.sprime2.cols(); ++j) s += F.sprime2(i, j);
            if (s != 3) {
                c = {"S' row sums", false, "row " + std::to_string(i + 1) + " sums to " + s.get_str()};
                break;
            }
        }
        r.items.push_back(c);
    }
    r.items.push_back({"automorphism lists", F.aut_L.size() == 5 && F.aut_L_prime.size() == 25 &&
                                                 F.sprime2.rows() == 25 && F.sprime2.cols() == 5,
                       "lengths " + std::to_string(F.aut_L.size()) + " and " + std::to_string(F.aut_L_prime.size())});
    r.items.push_back(detail::row_sum_check("T2 (5 x 5) row sums", F.t2_5x5.entries, e2));
    {
        ChecksumItem c{"weighted symmetry (5 x 5)", true, "t_ij / aut_i = t_ji / aut_j"};
        const auto& aut = F.t2_5x5.aut_orders.empty() ? F.aut_L : F.t2_5x5.aut_orders;
        const IntMatrix& t = F.t2_5x5.entries;
        for (size_t i = 0; i < t.rows() && c.ok; ++i)
            for (size_t j = 0; j < t.cols(); ++j)
                if (t(i, j) * aut[j] != t(j, i) * aut[i]) {
                    c = {"weighted symmetry (5 x 5)", false, "fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
                    break;
                }
        r.items.push_back(c);
    }
    r.items.push_back({"5 x 5 automorphism orders", F.t2_5x5.aut_orders.empty() || F.t2_5x5.aut_orders == F.aut_L,
                       "matrix file and S' file agree"});
    return r;
}

inline nlohmann::json to_json(const ChecksumReport& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : r.items) out.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return out;
}

/// perm[i] = index in `reference` of the automorphism order aut[i]; orders
/// must be distinct.
inline std::vector<size_t> permutation_by_aut_orders(const std::vector<Integer>& aut, const std::vector<Integer>& reference) {
    if (aut.size() != reference.size()) throw PreconditionError("workbench", "class counts differ");
    std::vector<size_t> perm(aut.size());
    for (size_t i = 0; i < aut.size(); ++i) {
        size_t hits = 0;
        for (size_t j = 0; j < reference.size(); ++j)
            if (reference[j] == aut[i]) {
                perm[i] = j;
                ++hits;
            }
        if (hits != 1)
            throw UnsupportedCaseError("workbench", "automorphism order " + aut[i].get_str() + " does not identify a unique class");
    }
    return perm;
}

/// The matrix with class i renamed perm[i].
inline HeckeMatrix permute_classes(const HeckeMatrix& T, const std::vector<size_t>& perm) {
    HeckeMatrix out = T;
    for (size_t i = 0; i < T.size(); ++i)
        for (size_t j = 0; j < T.size(); ++j) out.entries(perm[i], perm[j]) = T.entries(i, j);
    if (!T.aut_orders.empty())
        for (size_t i = 0; i < T.size(); ++i) out.aut_orders[perm[i]] = T.aut_orders[i];
    return out;
}

/// Eigensystem of the two 20 x 20 fixtures labelled as in the table.
inline EigenSystem fixture_eigensystem(const FixtureSet& F) {
    EigenSystem E = eigensystem({F.t2, F.t3});
    label_by_table(E, F.table);
    return E;
}

}  // namespace eisen
