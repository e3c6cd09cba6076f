#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eisenhecke/core/quadratic.hpp"

namespace eisen {

struct FormData {
    std::string id;
    int weight = 0;
    int level = 1;
    bool nebentypus = false;  // character chi_{-3}
    std::map<int, QuadExtElem> coeffs;
    std::map<int, std::string> provenance;  // per coefficient
};

/// Hecke eigenvalues of the modular forms and U4 forms used by the
/// parameters, each with a provenance note.
class CoefficientStore {
public:
    void add_form(FormData f) { forms_[f.id] = std::move(f); }
    void set_coefficient(const std::string& id, int n, const QuadExtElem& v, const std::string& prov) {
        auto it = forms_.find(id);
        if (it == forms_.end()) throw PreconditionError("arthur", "unknown form " + id);
        it->second.coeffs[n] = v;
        it->second.provenance[n] = prov;
    }
    void set_u4_trace(const std::string& atom, int p, const QuadExtElem& v, const std::string& prov) {
        u4_[atom][p] = v;
        u4_prov_[atom][p] = prov;
    }

    const std::map<std::string, FormData>& forms() const { return forms_; }
    const FormData* form(const std::string& id) const {
        auto it = forms_.find(id);
        return it == forms_.end() ? nullptr : &it->second;
    }

    /// The form of a given level and weight (unique in the store).
    const FormData& form_for(int level, int weight) const {
        const FormData* hit = nullptr;
        for (const auto& [id, f] : forms_)
            if (f.level == level && f.weight == weight) {
                if (hit) throw PreconditionError("arthur", "two forms of level " + std::to_string(level) + " and weight " +
                                                               std::to_string(weight) + " in the store");
                hit = &f;
            }
        if (!hit)
            throw MissingCoefficientError("arthur", "no form of level " + std::to_string(level) + " and weight " +
                                                        std::to_string(weight) + " in the store");
        return *hit;
    }

    QuadExtElem coefficient(const FormData& f, int n) const {
        auto it = f.coeffs.find(n);
        if (it == f.coeffs.end())
            throw MissingCoefficientError("arthur", "a_" + std::to_string(n) + " of " + f.id + " is not in the store");
        return it->second;
    }

    QuadExtElem u4_trace(const std::string& atom, int p) const {
        auto it = u4_.find(atom);
        if (it == u4_.end() || !it->second.count(p))
            throw MissingCoefficientError("arthur", "no trace for " + atom + " at " + std::to_string(p));
        return it->second.at(p);
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        for (const auto& [id, f] : forms_) {
            nlohmann::json c, prov;
            for (const auto& [n, v] : f.coeffs) c[std::to_string(n)] = v.str();
            for (const auto& [n, p] : f.provenance) prov[std::to_string(n)] = p;
            j["forms"][id] = {{"weight", f.weight}, {"level", f.level}, {"char", f.nebentypus ? "chi-3" : "triv"},
                              {"coeffs", c}, {"provenance", prov}};
        }
        for (const auto& [a, m] : u4_)
            for (const auto& [p, v] : m) {
                j["u4_traces"][a][std::to_string(p)] = v.str();
                j["u4_traces"][a]["provenance"] = u4_prov_.at(a).at(p);
            }
        return j;
    }

private:
    std::map<std::string, FormData> forms_;
    std::map<std::string, std::map<int, QuadExtElem>> u4_;
    std::map<std::string, std::map<int, std::string>> u4_prov_;
};

/// q-expansion coefficients 1..n of Delta = q prod (1 - q^k)^24.
inline std::vector<Integer> delta_qexpansion(int n) {
    std::vector<Integer> e(static_cast<size_t>(n), 0);  // prod (1 - q^k)^24 up to q^{n-1}
    e[0] = 1;
    for (int k = 1; k < n; ++k)
        for (int r = 0; r < 24; ++r)
            for (int m = n - 1; m >= k; --m) e[static_cast<size_t>(m)] -= e[static_cast<size_t>(m - k)];
    std::vector<Integer> tau(static_cast<size_t>(n) + 1, 0);
    for (int m = 1; m <= n; ++m) tau[static_cast<size_t>(m)] = e[static_cast<size_t>(m - 1)];
    return tau;
}

inline CoefficientStore store_from_json(const nlohmann::json& j) {
    CoefficientStore s;
    for (const auto& [id, f] : j.at("forms").items()) {
        FormData d;
        d.id = id;
        d.weight = f.at("weight").get<int>();
        d.level = f.at("level").get<int>();
        d.nebentypus = f.value("char", "triv") == "chi-3";
        std::string prov = f.contains("provenance") && f["provenance"].is_string() ? f["provenance"].get<std::string>() : "";
        for (const auto& [n, v] : f.at("coeffs").items()) {
            int k = std::stoi(n);
            d.coeffs[k] = parse_quadratic(v.get<std::string>());
            if (f.contains("provenance") && f["provenance"].is_object()) d.provenance[k] = f["provenance"].value(n, "");
            else d.provenance[k] = prov;
        }
        s.add_form(std::move(d));
    }
    if (j.contains("u4_traces"))
        for (const auto& [atom, m] : j["u4_traces"].items()) {
            std::string prov = m.value("provenance", "");
            for (const auto& [p, v] : m.items())
                if (p != "provenance") s.set_u4_trace(atom, std::stoi(p), parse_quadratic(v.get<std::string>()), prov);
        }
    return s;
}

/// Adds tau(p) for primes p <= bound to the level-1 weight-12 form, computed
/// from the eta product.
inline void extend_with_tau(CoefficientStore& s, int bound) {
    const FormData& delta = s.form_for(1, 12);
    std::string id = delta.id;
    auto tau = delta_qexpansion(bound);
    for (int p = 2; p <= bound; ++p) {
        if (!is_probable_prime(Integer(p)) || delta.coeffs.count(p)) continue;
        s.set_coefficient(id, p, QuadExtElem(tau[static_cast<size_t>(p)]), "eta product q prod (1-q^n)^24");
    }
}

inline CoefficientStore load_coefficient_store(const std::string& path, int tau_bound = 97) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("arthur", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    CoefficientStore s = store_from_json(j);
    if (tau_bound > 0) extend_with_tau(s, tau_bound);
    return s;
}

}  // namespace eisen
