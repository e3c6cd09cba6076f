#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eisenhecke/lattice/constructions.hpp"
#include "eisenhecke/theta/theta.hpp"
#include "eisenhecke/workbench/fixtures.hpp"

using namespace eisen;

namespace {

struct Globals {
    uint64_t seed = 0;
    unsigned jobs = 1;
    bool allow_long = false;
    bool quiet = false;
    std::string fixtures;
};

Globals G;

void progress(const std::string& s) {
    if (!G.quiet) std::cerr << s << std::endl;
}

void emit(const nlohmann::json& j, const std::string& out) {
    if (out.empty()) std::cout << j.dump(1) << "\n";
    else write_json(j, out);
}

std::string fixtures_dir() { return G.fixtures.empty() ? fixture_dir() : G.fixtures; }

// standard:N, golay, or a lattice JSON file
HermitianLattice lattice_arg(const std::string& s) {
    if (s.rfind("standard:", 0) == 0) return HermitianLattice::standard(std::stoul(s.substr(9)));
    if (s == "golay") return golay_sqrt3_lattice();
    return load_lattice(s);
}

void require_long(size_t rank, const std::string& what) {
    if (rank >= 10 && !G.allow_long)
        throw PreconditionError("workbench", what + " in rank " + std::to_string(rank) + " is long-running; pass --allow-long");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string t;
    while (std::getline(in, t, sep))
        if (!t.empty()) out.push_back(t);
    return out;
}

GenusEnumeration genus_arg(const std::string& lattice, const std::string& archive, const EisIdeal& P) {
    if (!archive.empty() && std::filesystem::exists(archive + "/manifest.json")) {
        GenusEnumeration g = load_genus_archive(archive);
        if (g.closed) {
            progress("loaded " + std::to_string(g.size()) + " classes from " + archive);
            return g;
        }
    }
    if (lattice.empty()) throw PreconditionError("workbench", "need --lattice or a closed genus archive");
    HermitianLattice L = lattice_arg(lattice);
    require_long(L.rank(), "genus enumeration");
    GenusOptions opt;
    opt.archive_dir = archive;
    opt.shuffle_seed = G.seed;
    opt.progress = progress;
    return enumerate_genus(L, P, opt);
}

EigenSystem eigen_input(const std::string& input) {
    if (input == "fixtures") return fixture_eigensystem(load_fixtures(fixtures_dir()));
    auto files = split(input, ',');
    if (files.size() == 1) {
        nlohmann::json j = read_json(files[0]);
        if (j.contains("rows") && j.contains("operators")) return eigensystem_from_json(j);
    }
    std::vector<HeckeMatrix> ops;
    for (const auto& f : files) ops.push_back(load_hecke(f));
    EigenSystem E = eigensystem(ops);
    // table labels when the spectrum is the tabulated one
    try {
        label_by_table(E, load_fixtures(fixtures_dir()).table);
        progress("labels taken from the eigenvalue table");
    } catch (const Error&) {
        progress("labels in decreasing eigenvalue order");
    }
    return E;
}

int cmd_fixtures_check() {
    FixtureSet F = load_fixtures(fixtures_dir());
    ChecksumReport r = fixture_checksum(F);
    for (const auto& c : r.items) std::cout << (c.ok ? "pass  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
    return r.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke operators on Hermitian lattices over the Eisenstein integers"};
    app.require_subcommand(1);
    app.add_option("--seed", G.seed, "shuffle seed for neighbour processing order (0 = fixed order)");
    app.add_option("--jobs", G.jobs, "worker cap; computations currently run on one thread")->check(CLI::PositiveNumber);
    app.add_flag("--allow-long", G.allow_long, "permit rank >= 10 genus and Hecke computations");
    app.add_flag("-q,--quiet", G.quiet, "no progress on stderr");
    app.add_option("--fixtures", G.fixtures, "fixture directory (default: $EISENHECKE_FIXTURES or the shipped data)");

    std::string lattice, prime, out, archive, method = "direct", input = "fixtures", which = "unimodular";
    int64_t precision = 10;
    std::string qmin = "11";
    bool list = false, with_candidates = false;

    auto* genus = app.add_subcommand("genus", "enumerate a genus by neighbours");
    genus->add_option("lattice", lattice, "standard:N, golay or a lattice JSON file")->required();
    genus->add_option("--prime", prime, "prime ideal, e.g. 2, sqrt(-3), 2+3w")->required();
    genus->add_option("--out", archive, "archive directory (checkpointed per class)");

    auto* nb = app.add_subcommand("neighbours", "neighbours of one lattice");
    nb->add_option("lattice", lattice)->required();
    nb->add_option("--prime", prime)->required();
    nb->add_flag("--list", list, "build and verify every neighbour instead of counting");
    nb->add_option("--out", out);

    auto* hk = app.add_subcommand("hecke", "Hecke matrix of a genus");
    hk->add_option("--method", method)->check(CLI::IsMember({"direct", "intertwining", "fixture"}));
    hk->add_option("--prime", prime)->required();
    hk->add_option("--lattice", lattice, "seed lattice of the genus");
    hk->add_option("--genus", archive, "genus archive directory (read if closed, else written)");
    hk->add_option("--fixture", which, "fixture genus: unimodular or eisenstein")
        ->check(CLI::IsMember({"unimodular", "eisenstein"}));
    hk->add_option("--out", out);

    auto* eg = app.add_subcommand("eigen", "common eigenspaces of Hecke matrices");
    eg->add_option("--input", input, "fixtures, or comma-separated Hecke matrix files");
    eg->add_option("--out", out);

    auto* cg = app.add_subcommand("congruences", "congruences between eigensystems");
    cg->add_option("--input", input, "fixtures, an eigen output file, or Hecke matrix files");
    cg->add_option("--qmin", qmin);
    cg->add_flag("--candidates", with_candidates, "also list difference-gcd candidates");
    cg->add_option("--out", out);

    auto* ar = app.add_subcommand("arthur", "eigenvalues from Arthur parameters");
    ar->require_subcommand(1);
    auto* vt = ar->add_subcommand("verify-table", "compare every table row with its parameter");
    vt->add_option("--out", out);
    std::string param;
    auto* ev = ar->add_subcommand("eval", "eigenvalue of a parameter at a prime");
    ev->add_option("param", param)->required();
    ev->add_option("--prime", prime)->required();
    int ci = 0, cj = 0;
    std::string cq, primes = "2,sqrt(-3)";
    auto* ac = ar->add_subcommand("congruence", "parameter-level congruence of two table rows");
    ac->add_option("i", ci)->required();
    ac->add_option("j", cj)->required();
    ac->add_option("q", cq)->required();
    ac->add_option("--primes", primes, "comma-separated prime ideals");

    auto* th = app.add_subcommand("theta", "degree-1 theta series");
    th->add_option("lattice", lattice)->required();
    th->add_option("--precision", precision);
    th->add_option("--out", out);

    auto* fx = app.add_subcommand("fixtures", "fixture tools");
    fx->require_subcommand(1);
    auto* fc = fx->add_subcommand("check", "transcription checksums");

    CLI11_PARSE(app, argc, argv);

    try {
        if (genus->parsed()) {
            EisIdeal P = parse_prime_ideal(prime);
            HermitianLattice L = lattice_arg(lattice);
            require_long(L.rank(), "genus enumeration");
            GenusOptions opt;
            opt.archive_dir = archive;
            opt.shuffle_seed = G.seed;
            opt.progress = progress;
            GenusEnumeration g = enumerate_genus(L, P, opt);
            nlohmann::json j{{"prime", g.prime.str()}, {"class_count", g.size()}, {"aut_orders", nlohmann::json::array()}};
            for (const auto& a : g.aut_orders) j["aut_orders"].push_back(a.get_str());
            std::cout << j.dump(1) << "\n";
        } else if (nb->parsed()) {
            EisIdeal P = parse_prime_ideal(prime);
            HermitianLattice L = lattice_arg(lattice);
            if (list) {
                NeighbourSet s = neighbours(L, P);
                nlohmann::json j{{"prime", P.str()}, {"neighbours", nlohmann::json::array()}, {"intersections", s.intersections.size()}};
                for (const auto& N : s.neighbours) j["neighbours"].push_back(lattice_to_json(N));
                emit(j, out);
            } else {
                NeighbourCount c = count_neighbours(L, P);
                emit({{"prime", P.str()}, {"neighbours", c.neighbours}, {"intersections", c.intersections}}, out);
            }
        } else if (hk->parsed()) {
            EisIdeal P = parse_prime_ideal(prime);
            HeckeMatrix T;
            if (method == "fixture") {
                FixtureSet F = load_fixtures(fixtures_dir());
                std::vector<const HeckeMatrix*> pool{&F.t2, &F.t3, &F.t2_5x5};
                const HeckeMatrix* hit = nullptr;
                for (const auto* m : pool)
                    if (m->prime == P && (m->size() == 5) == (which == "eisenstein")) hit = m;
                if (!hit) throw UnsupportedCaseError("workbench", "no " + which + " fixture at " + P.str());
                T = *hit;
                T.method = "fixture";
            } else {
                GenusEnumeration g = genus_arg(lattice, archive, P);
                require_long(g.representatives.at(0).rank(), "Hecke computation");
                HeckeOptions opt;
                opt.progress = progress;
                if (method == "direct") {
                    T = hecke_direct(g, P, opt);
                } else {
                    IntertwiningResult r = hecke_intertwining(g, P, opt);
                    progress(std::to_string(r.sublattices.classes.size()) + " sublattice classes, d = " + r.data.d.get_str());
                    T = r.T;
                }
            }
            emit(to_json(T), out);
        } else if (eg->parsed()) {
            emit(to_json(eigen_input(input)), out);
        } else if (cg->parsed()) {
            EigenSystem E = eigen_input(input);
            Integer q(qmin);
            auto reports = scan_congruences_lemma(E, standard_probes(E.h), q);
            std::vector<CongruenceReport> proved, open;
            for (const auto& r : reports) (r.proved ? proved : open).push_back(r);
            nlohmann::json j{{"q_min", q.get_str()}, {"proved", to_json(proved)}, {"unproved", to_json(open)}};
            if (with_candidates) j["candidates"] = to_json(scan_congruence_candidates(E, q, reports));
            emit(j, out);
        } else if (vt->parsed()) {
            FixtureSet F = load_fixtures(fixtures_dir());
            TableReport r = verify_table(F.table, F.store);
            nlohmann::json j{{"rows", to_json(r)}, {"summary", nlohmann::json::object()}};
            bool bad = false;
            for (const auto& op : F.table.operators) {
                j["summary"][op] = {{"match", r.count(op, RowStatus::match)},
                                    {"match_via_u4_trace", r.trace_matches(op)},
                                    {"mismatch", r.count(op, RowStatus::mismatch)},
                                    {"excluded", r.count(op, RowStatus::excluded)}};
                std::cerr << "T(" << op << "): " << r.count(op, RowStatus::match) << "/" << F.table.rows.size()
                          << " match (" << r.trace_matches(op) << " via stored U4 traces), " << r.count(op, RowStatus::mismatch) << " mismatch, "
                          << r.count(op, RowStatus::excluded) << " excluded\n";
                bad = bad || r.count(op, RowStatus::mismatch) > 0;
            }
            emit(j, out);
            return bad ? 2 : 0;
        } else if (ev->parsed()) {
            FixtureSet F = load_fixtures(fixtures_dir());
            std::cout << eigenvalue_at(parse_parameter(param), parse_prime_ideal(prime), F.store).str() << "\n";
        } else if (ac->parsed()) {
            FixtureSet F = load_fixtures(fixtures_dir());
            auto row = [&](int label) -> const EigenvalueRow& {
                for (const auto& r : F.table.rows)
                    if (r.label == label) return r;
                throw PreconditionError("workbench", "no table row " + std::to_string(label));
            };
            std::vector<EisIdeal> ps;
            for (const auto& s : split(primes, ',')) ps.push_back(parse_prime_ideal(s));
            auto res = verify_parameter_congruence(parse_parameter(row(ci).parameter), parse_parameter(row(cj).parameter),
                                                   parse_modulus(cq).q, ps, F.store);
            bool bad = false;
            for (const auto& r : res) {
                std::cout << prime_label(r.prime) << ": ";
                if (!r.checked) std::cout << r.note << "\n";
                else std::cout << (r.holds ? "holds" : "FAILS") << " (difference " << r.difference.str() << ")\n";
                bad = bad || (r.checked && !r.holds);
            }
            return bad ? 2 : 0;
        } else if (th->parsed()) {
            emit(to_json(theta_degree1(lattice_arg(lattice), precision)), out);
        } else if (fc->parsed()) {
            return cmd_fixtures_check();
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
