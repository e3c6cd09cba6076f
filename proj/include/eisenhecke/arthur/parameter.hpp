#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "eisenhecke/core/errors.hpp"

namespace eisen {

enum class ConstituentKind {
    EllipticLevel1,
    EllipticLevel3Trivial,
    EllipticLevel3Nebentypus,
    Psi6,
    Psi6Bar,
    U4Form,
    TrivialBlock
};

/// One block Pi[d] of a global Arthur parameter.
///
/// Elliptic constituents are base changes of weight-k eigenforms (the atom
/// D{k-1} or 3D{k-1}); U4 constituents D{u},{w} have infinity type
/// +-u/2, +-w/2, i.e. u = 2a+3 and w = 2b+1 for the weight V_{a,b}.
struct ArthurConstituent {
    ConstituentKind kind = ConstituentKind::TrivialBlock;
    int weight = 0;      // elliptic
    int u = 0, w = 0;    // U4Form
    bool conjugate = false;  // U4Form: the Galois conjugate of a pair
    int twist = 0;       // +1 psi6, -1 conj(psi6)
    int d = 1;

    int base_dimension() const {
        switch (kind) {
            case ConstituentKind::EllipticLevel1:
            case ConstituentKind::EllipticLevel3Trivial:
            case ConstituentKind::EllipticLevel3Nebentypus:
                return 2;
            case ConstituentKind::U4Form:
                return 4;
            default:
                return 1;
        }
    }
    int dimension() const { return base_dimension() * d; }
    bool elliptic() const { return base_dimension() == 2; }

    std::string atom() const {
        std::string s;
        switch (kind) {
            case ConstituentKind::EllipticLevel1: s = "D" + std::to_string(weight - 1); break;
            case ConstituentKind::EllipticLevel3Trivial:
            case ConstituentKind::EllipticLevel3Nebentypus: s = "3D" + std::to_string(weight - 1); break;
            case ConstituentKind::Psi6: s = "psi6"; break;
            case ConstituentKind::Psi6Bar: s = "cpsi6"; break;
            case ConstituentKind::U4Form:
                s = std::string(conjugate ? "c" : "") + "D" + std::to_string(u) + "," + std::to_string(w);
                break;
            case ConstituentKind::TrivialBlock: s = ""; break;
        }
        if (twist) s += twist > 0 ? "*psi6" : "*cpsi6";
        return s;
    }

    std::string str() const {
        if (kind == ConstituentKind::TrivialBlock) return "[" + std::to_string(d) + "]";
        return atom() + (d > 1 ? "[" + std::to_string(d) + "]" : "");
    }

    /// Doubled infinity exponents of the base (before the [d] smear).
    std::vector<int> base_exponents() const {
        std::vector<int> e;
        switch (kind) {
            case ConstituentKind::EllipticLevel1:
            case ConstituentKind::EllipticLevel3Trivial:
            case ConstituentKind::EllipticLevel3Nebentypus:
                e = {weight - 1, -(weight - 1)};
                break;
            case ConstituentKind::Psi6: e = {-6}; break;
            case ConstituentKind::Psi6Bar: e = {6}; break;
            case ConstituentKind::U4Form: e = {u, w, -w, -u}; break;
            case ConstituentKind::TrivialBlock: e = {0}; break;
        }
        for (auto& x : e) x += -6 * twist;
        return e;
    }

    friend bool operator==(const ArthurConstituent& a, const ArthurConstituent& b) { return a.str() == b.str(); }
};

struct ArthurParameter {
    std::vector<ArthurConstituent> constituents;

    int total_dimension() const {
        int n = 0;
        for (const auto& c : constituents) n += c.dimension();
        return n;
    }
    std::string str() const {
        std::string s;
        for (const auto& c : constituents) s += (s.empty() ? "" : "+") + c.str();
        return s;
    }
};

namespace detail {

inline ArthurConstituent parse_atom(const std::string& a) {
    ArthurConstituent c;
    auto number = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw PreconditionError("arthur", "unknown atom '" + a + "'");
        return std::stoi(s);
    };
    if (a == "psi6") {
        c.kind = ConstituentKind::Psi6;
    } else if (a == "cpsi6") {
        c.kind = ConstituentKind::Psi6Bar;
    } else if (a.rfind("3D", 0) == 0) {
        c.weight = number(a.substr(2)) + 1;
        c.kind = c.weight % 2 ? ConstituentKind::EllipticLevel3Nebentypus : ConstituentKind::EllipticLevel3Trivial;
    } else if (a.rfind("D", 0) == 0 || a.rfind("cD", 0) == 0) {
        bool conj = a[0] == 'c';
        std::string rest = a.substr(conj ? 2 : 1);
        auto comma = rest.find(',');
        if (comma == std::string::npos) {
            if (conj) throw PreconditionError("arthur", "unknown atom '" + a + "'");
            c.kind = ConstituentKind::EllipticLevel1;
            c.weight = number(rest) + 1;
        } else {
            c.kind = ConstituentKind::U4Form;
            c.u = number(rest.substr(0, comma));
            c.w = number(rest.substr(comma + 1));
            c.conjugate = conj;
            if (c.u % 2 == 0 || c.w % 2 == 0 || c.u <= c.w)
                throw PreconditionError("arthur", "U4 atom needs odd u > w: '" + a + "'");
        }
    } else {
        throw PreconditionError("arthur", "unknown atom '" + a + "'");
    }
    return c;
}

}  // namespace detail

/// Grammar: term ("+" term)*, term = atom ["*" ("psi6"|"cpsi6")] ["[" d "]"]
/// or "[" d "]"; "3D6" abbreviates psi6 + cpsi6.
inline ArthurParameter parse_parameter_unchecked(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw PreconditionError("arthur", "empty parameter");
    ArthurParameter A;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw PreconditionError("arthur", "empty term in '" + text + "'");
        int d = 1;
        auto lb = term.find('[');
        if (lb != std::string::npos) {
            if (term.back() != ']' || term.find('[', lb + 1) != std::string::npos)
                throw PreconditionError("arthur", "malformed brackets in '" + term + "'");
            std::string ds = term.substr(lb + 1, term.size() - lb - 2);
            if (ds.empty() || !std::all_of(ds.begin(), ds.end(), [](unsigned char ch) { return std::isdigit(ch); }))
                throw PreconditionError("arthur", "malformed brackets in '" + term + "'");
            d = std::stoi(ds);
            if (d < 1) throw PreconditionError("arthur", "bracket [0] in '" + term + "'");
            term = term.substr(0, lb);
        } else if (term.find(']') != std::string::npos) {
            throw PreconditionError("arthur", "malformed brackets in '" + term + "'");
        }
        if (term.empty()) {
            ArthurConstituent c;
            c.kind = ConstituentKind::TrivialBlock;
            c.d = d;
            A.constituents.push_back(c);
        } else {
            int twist = 0;
            auto star = term.find('*');
            if (star != std::string::npos) {
                std::string t = term.substr(star + 1);
                if (t == "psi6") twist = 1;
                else if (t == "cpsi6") twist = -1;
                else throw PreconditionError("arthur", "can only twist by psi6 or cpsi6, got '" + t + "'");
                term = term.substr(0, star);
            }
            ArthurConstituent c = detail::parse_atom(term);
            if (twist && !c.elliptic()) throw PreconditionError("arthur", "only elliptic constituents are twisted");
            c.twist = twist;
            c.d = d;
            if (c.kind == ConstituentKind::EllipticLevel3Nebentypus && c.weight == 7 && !twist) {
                ArthurConstituent p, q;
                p.kind = ConstituentKind::Psi6;
                q.kind = ConstituentKind::Psi6Bar;
                p.d = q.d = d;
                A.constituents.push_back(p);
                A.constituents.push_back(q);
            } else {
                A.constituents.push_back(c);
            }
        }
        pos = end + 1;
    }
    return A;
}

inline ArthurParameter parse_parameter(const std::string& text, int dimension = 12) {
    ArthurParameter A = parse_parameter_unchecked(text);
    if (A.total_dimension() != dimension)
        throw PreconditionError("arthur", "parameter '" + text + "' has dimension " + std::to_string(A.total_dimension()) +
                                              ", expected " + std::to_string(dimension));
    return A;
}

/// Doubled infinity exponents, sorted decreasingly: each base exponent e
/// smeared to e + d-1, e + d-3, ..., e - (d-1).
inline std::vector<int> infinity_exponents(const ArthurParameter& A) {
    std::vector<int> out;
    for (const auto& c : A.constituents)
        for (int e : c.base_exponents())
            for (int j = 0; j < c.d; ++j) out.push_back(e + c.d - 1 - 2 * j);
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// The exponents {11/2, 9/2, ..., -11/2} (doubled) required in rank n.
inline std::vector<int> regular_exponents(int n = 12) {
    std::vector<int> out;
    for (int j = 0; j < n; ++j) out.push_back(n - 1 - 2 * j);
    return out;
}

inline bool has_regular_infinity_type(const ArthurParameter& A, int n = 12) {
    return infinity_exponents(A) == regular_exponents(n);
}

}  // namespace eisen
