#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eisenhecke/lattice/automorphism.hpp"
#include "eisenhecke/neighbour/neighbour.hpp"

namespace eisen {

/// Rebases L onto a basis of short vectors.
inline HermitianLattice reduce_lattice(const HermitianLattice& L) {
    if (L.rank() == 0) return L;
    ps::SourceBasis src = ps::make_source(L.gram64());
    return L.with_coordinates(to_field(src.P));
}

/// Isometry classes seen so far, looked up by fingerprint and then by
/// backtracking search.
class ClassRegistry {
public:
    explicit ClassRegistry(int64_t fingerprint_norm = 3) : fp_norm_(fingerprint_norm) {}

    int64_t fingerprint_norm() const { return fp_norm_; }
    size_t size() const { return lattices_.size(); }
    const HermitianLattice& lattice(size_t i) const { return lattices_[i]; }
    const Fingerprint& fingerprint_of(size_t i) const { return fps_[i]; }

    Fingerprint fingerprint_for(const Eis64Matrix& g) const { return fingerprint(g, fp_norm_); }

    /// Index of the class of g, if present. With trust_unique a single
    /// fingerprint match is accepted without search.
    std::optional<size_t> find(const Eis64Matrix& g, const Fingerprint& fp, bool trust_unique = false) {
        auto it = buckets_.find(fp);
        if (it == buckets_.end()) return std::nullopt;
        if (trust_unique && it->second.size() == 1) return it->second.front();
        const bool filter = it->second.size() > 1;
        ShellProfile prof = filter ? shell_profile(g) : ShellProfile{};
        std::optional<ps::SourceBasis> src;
        for (size_t i : it->second) {
            if (filter) {
                if (!profiles_[i]) profiles_[i] = shell_profile(lattices_[i].gram64());
                if (*profiles_[i] != prof) continue;
            }
            if (!src) src = ps::make_source(g);
            ++isometry_tests_;
            if (find_isometry(*src, *targets_[i])) return i;
        }
        return std::nullopt;
    }

    size_t add(const HermitianLattice& L, const Fingerprint& fp) {
        lattices_.push_back(L);
        fps_.push_back(fp);
        targets_.push_back(std::make_unique<IsometryTarget>(L.gram64()));
        profiles_.emplace_back();
        buckets_[fp].push_back(lattices_.size() - 1);
        return lattices_.size() - 1;
    }

    uint64_t isometry_tests() const { return isometry_tests_; }

private:
    int64_t fp_norm_;
    std::vector<HermitianLattice> lattices_;
    std::vector<Fingerprint> fps_;
    std::vector<std::unique_ptr<IsometryTarget>> targets_;
    std::vector<std::optional<ShellProfile>> profiles_;  // computed on first collision
    std::map<Fingerprint, std::vector<size_t>> buckets_;
    uint64_t isometry_tests_ = 0;
};

struct DiscoveryEdge {
    size_t from = 0;
    size_t to = 0;
    std::vector<uint32_t> line;
    bool new_class = false;
};

struct GenusEnumeration {
    EisIdeal prime;
    std::vector<HermitianLattice> representatives;
    std::vector<Integer> aut_orders;
    std::vector<AutomorphismGroup> automorphisms;
    std::vector<Fingerprint> fingerprints;
    int64_t fingerprint_norm = 3;
    std::vector<DiscoveryEdge> discovery_log;
    bool closed = false;

    size_t size() const { return representatives.size(); }
};

struct GenusOptions {
    int64_t fingerprint_norm = 3;
    size_t max_classes = 100000;
    std::string archive_dir;  // persist classes as they are found
    uint64_t shuffle_seed = 0;  // nonzero: process each frontier in shuffled order
    std::function<void(const std::string&)> progress;
};

namespace detail {

inline std::string class_file(size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "class_%03zu.json", i + 1);
    return buf;
}

inline nlohmann::json fingerprint_json(const Fingerprint& f) {
    return {{"det", f.det.get_str()}, {"counts", f.counts}};
}

inline void write_manifest(const GenusEnumeration& g, const std::string& dir, size_t processed) {
    nlohmann::json m;
    m["class_count"] = g.size();
    m["prime"] = g.prime.str();
    m["closed"] = g.closed;
    m["processed"] = processed;
    m["fingerprint_norm"] = g.fingerprint_norm;
    m["aut_orders"] = nlohmann::json::array();
    m["fingerprints"] = nlohmann::json::array();
    m["files"] = nlohmann::json::array();
    for (size_t i = 0; i < g.size(); ++i) {
        m["aut_orders"].push_back(i < g.aut_orders.size() ? g.aut_orders[i].get_str() : "");
        m["fingerprints"].push_back(fingerprint_json(g.fingerprints[i]));
        m["files"].push_back(class_file(i));
    }
    std::string tmp = dir + "/manifest.json.tmp";
    {
        std::ofstream out(tmp);
        out << m.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, dir + "/manifest.json");
}

}  // namespace detail

/// Kneser closure: breadth-first over classes, adding each neighbour that is
/// not isometric to a known class.
inline GenusEnumeration enumerate_genus(const HermitianLattice& seed, const EisIdeal& P, const GenusOptions& opt = {}) {
    if (seed.rank() < 3) throw UnsupportedCaseError("neighbour", "genus enumeration by neighbours needs rank >= 3");
    check_neighbour_preconditions(seed, P);
    GenusEnumeration g;
    g.prime = P;
    g.fingerprint_norm = opt.fingerprint_norm;
    ClassRegistry reg(opt.fingerprint_norm);
    auto say = [&](const std::string& s) {
        if (opt.progress) opt.progress(s);
    };
    if (!opt.archive_dir.empty()) std::filesystem::create_directories(opt.archive_dir);
    auto add_class = [&](const HermitianLattice& L, const Fingerprint& fp) {
        HermitianLattice R = reduce_lattice(L);
        size_t i = reg.add(R, fp);
        g.representatives.push_back(R);
        g.fingerprints.push_back(fp);
        if (!opt.archive_dir.empty()) save_lattice(R, opt.archive_dir + "/" + detail::class_file(i));
        say("class " + std::to_string(i + 1) + ": " + fp.str());
        return i;
    };
    add_class(seed, reg.fingerprint_for(seed.gram64()));
    std::mt19937_64 rng(opt.shuffle_seed);
    for (size_t cur = 0; cur < g.size(); ++cur) {
        const HermitianLattice L = g.representatives[cur];
        AutomorphismGroup aut = automorphism_group(L.gram64());
        g.aut_orders.push_back(aut.order);
        g.automorphisms.push_back(aut);
        LineContext ctx(L.gram64(), P);
        LineOrbits orbits = admissible_line_orbits(ctx, aut.generators);
        say("class " + std::to_string(cur + 1) + ": |Aut| = " + aut.order.get_str() + ", " +
            std::to_string(orbits.sizes.size()) + " line orbits");
        std::vector<size_t> order(orbits.sizes.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        if (opt.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
        for (size_t k : order) {
            const auto& line = orbits.representatives[k];
            LineNeighbours ln = neighbours_of_line(ctx, line);
            for (const auto& c : ln.neighbours) {
                HermitianLattice N = L.with_coordinates(c);
                Eis64Matrix gn = N.gram64();
                Fingerprint fp = reg.fingerprint_for(gn);
                auto hit = reg.find(gn, fp);
                DiscoveryEdge e{cur, 0, line, !hit};
                if (hit) {
                    e.to = *hit;
                } else {
                    if (g.size() >= opt.max_classes)
                        throw UnsupportedCaseError("neighbour", "class limit reached during genus enumeration");
                    e.to = add_class(N, fp);
                }
                g.discovery_log.push_back(e);
            }
        }
        if (!opt.archive_dir.empty()) detail::write_manifest(g, opt.archive_dir, cur + 1);
    }
    g.closed = true;
    if (!opt.archive_dir.empty()) detail::write_manifest(g, opt.archive_dir, g.size());
    return g;
}

/// Reads a genus archive written by enumerate_genus (automorphism data is
/// recomputed on demand).
inline GenusEnumeration load_genus_archive(const std::string& dir) {
    std::ifstream in(dir + "/manifest.json");
    if (!in) throw PreconditionError("neighbour", "no manifest.json in " + dir);
    nlohmann::json m;
    in >> m;
    GenusEnumeration g;
    g.prime = parse_prime_ideal(m.at("prime").get<std::string>());
    g.closed = m.value("closed", false);
    g.fingerprint_norm = m.value("fingerprint_norm", 3L);
    for (size_t i = 0; i < m.at("files").size(); ++i) {
        g.representatives.push_back(load_lattice(dir + "/" + m["files"][i].get<std::string>()));
        g.fingerprints.push_back(fingerprint(g.representatives.back().gram64(), g.fingerprint_norm));
        std::string a = m.at("aut_orders")[i].get<std::string>();
        if (!a.empty()) g.aut_orders.emplace_back(a);
    }
    return g;
}

inline void save_genus_archive(const GenusEnumeration& g, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (size_t i = 0; i < g.size(); ++i) save_lattice(g.representatives[i], dir + "/" + detail::class_file(i));
    detail::write_manifest(g, dir, g.size());
}

/// Fills in automorphism groups that are missing (e.g. after loading).
inline void ensure_automorphisms(GenusEnumeration& g) {
    for (size_t i = g.automorphisms.size(); i < g.size(); ++i) {
        g.automorphisms.push_back(automorphism_group(g.representatives[i].gram64()));
        if (i < g.aut_orders.size()) {
            if (g.aut_orders[i] != g.automorphisms[i].order)
                throw InvariantViolation("neighbour", "stored automorphism order disagrees with recomputation");
        } else {
            g.aut_orders.push_back(g.automorphisms[i].order);
        }
    }
}

}  // namespace eisen
