// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when a
// gating criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "eisenhecke/lattice/automorphism.hpp"
#include "eisenhecke/lattice/constructions.hpp"
#include "eisenhecke/theta/theta.hpp"
#include "eisenhecke/workbench/fixtures.hpp"
#include "support/oracles.hpp"

using namespace eisen;

namespace {

/// Collects failed sub-checks of one criterion.
class Checks {
public:
    template <class A, class B>
    void eq(const std::string& what, const A& got, const B& want) {
        ++count_;
        if (got == want) return;
        std::ostringstream os;
        os << what << ": got " << show(got) << ", expected " << show(want);
        failures_.push_back(os.str());
    }
    void truth(const std::string& what, bool ok) {
        ++count_;
        if (!ok) failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    size_t count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    template <class T>
    static std::string show(const T& x) {
        if constexpr (std::is_same_v<T, QuadExtElem>) return x.str();
        else if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) return x.get_str();
        else if constexpr (std::is_arithmetic_v<T>) return std::to_string(x);
        else if constexpr (std::is_convertible_v<T, std::string>) return std::string(x);
        else return "(value)";
    }
    size_t count_ = 0;
    std::vector<std::string> failures_;
};

struct Outcome {
    bool pass = false;
    std::string summary;
};

bool quiet() { return std::getenv("EISENHECKE_ACCEPTANCE_QUIET") != nullptr; }

void progress(const std::string& s) {
    if (!quiet()) std::cerr << "    " << s << "\n";
}

Outcome finish(const Checks& c, const std::string& summary) {
    Outcome o{c.ok(), summary + " (" + std::to_string(c.count()) + " checks)"};
    for (const auto& f : c.failures()) o.summary += "\n    failed: " + f;
    return o;
}

const FixtureSet& fixtures() {
    static const FixtureSet F = load_fixtures();
    return F;
}

const EigenSystem& fixture_system() {
    static const EigenSystem E = fixture_eigensystem(fixtures());
    return E;
}

const EisIdeal& P2() {
    static const EisIdeal P = parse_prime_ideal("2");
    return P;
}
const EisIdeal& P3() {
    static const EisIdeal P = parse_prime_ideal("sqrt(-3)");
    return P;
}

using Triple = std::tuple<int, int, std::string>;

template <class R>
std::set<Triple> triples(const std::vector<R>& rs) {
    std::set<Triple> out;
    for (const auto& r : rs) out.insert({std::min(r.i, r.j), std::max(r.i, r.j), r.modulus.str()});
    return out;
}

std::string show(const std::set<Triple>& s) {
    std::string out;
    for (const auto& [i, j, m] : s) out += "(" + std::to_string(i) + "," + std::to_string(j) + " mod " + m + ")";
    return out;
}

// Permutation p with B(p[i], p[j]) = A(i, j), by backtracking on diagonal
// entries and row multisets.
std::optional<std::vector<size_t>> match_up_to_relabelling(const IntMatrix& A, const IntMatrix& B) {
    const size_t n = A.rows();
    if (B.rows() != n) return std::nullopt;
    auto sig = [](const IntMatrix& M, size_t i) {
        std::vector<Integer> r;
        for (size_t j = 0; j < M.cols(); ++j) r.push_back(M(i, j));
        std::sort(r.begin(), r.end());
        r.push_back(M(i, i));
        return r;
    };
    std::vector<size_t> p(n);
    std::vector<bool> used(n, false);
    std::function<bool(size_t)> rec = [&](size_t i) {
        if (i == n) return true;
        auto si = sig(A, i);
        for (size_t c = 0; c < n; ++c) {
            if (used[c] || sig(B, c) != si) continue;
            bool ok = true;
            for (size_t k = 0; k < i && ok; ++k) ok = A(i, k) == B(c, p[k]) && A(k, i) == B(p[k], c);
            if (!ok) continue;
            p[i] = c;
            used[c] = true;
            if (rec(i + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return p;
}

// ---- criteria ----

Outcome fixture_integrity() {
    Checks c;
    const auto& F = fixtures();
    c.eq("T(2) row sum", F.t2.row_sum().value_or(-1), Integer(5593770));
    c.eq("T(sqrt(-3)) row sum", F.t3.row_sum().value_or(-1), Integer(266448));
    c.truth("T(2) T(sqrt(-3)) = T(sqrt(-3)) T(2)", F.t2.entries * F.t3.entries == F.t3.entries * F.t2.entries);
    for (size_t i = 0; i < F.sprime2.rows(); ++i) {
        Rational s = 0;
        for (size_t j = 0; j < F.sprime2.cols(); ++j) s += F.sprime2(i, j);
        c.eq("S' row " + std::to_string(i + 1) + " sum", s, Rational(3));
    }
    for (const auto& item : fixture_checksum(F).items) c.truth(item.name + ": " + item.detail, item.ok);
    return finish(c, "row sums 5593770 and 266448, commuting, S' rows sum to 3");
}

Outcome intertwining_reconstruction() {
    Checks c;
    const auto& F = fixtures();
    auto r = reconstruct_S_from_Sprime(F.sprime2, F.aut_L, F.aut_L_prime);
    c.truth("S is integral", r.integral);
    c.eq("common row sum d", r.d.value_or(-1), Integer(2796885));
    for (size_t i = 0; i < r.row_sums.size(); ++i) c.eq("S row " + std::to_string(i + 1), r.row_sums[i], Rational(2796885));
    c.truth("S S' - d I equals the printed 5 x 5 T(2)", r.T && *r.T == F.t2_5x5.entries);
    return finish(c, "S integral, rows sum to d = 2796885, S S' - dI = printed T(2)");
}

Outcome spectral_reproduction() {
    Checks c;
    const auto& E = fixture_system();
    const auto& T = fixtures().table;
    size_t one = 0, two = 0;
    for (const auto& S : E.spaces) (S.dim() == 1 ? one : two) += 1;
    c.eq("1-dimensional spaces", one, size_t(18));
    c.eq("2-dimensional spaces", two, size_t(1));
    c.truth("labels 19, 20 share the 2-dimensional space", E.spaces[E.space_of(19)].labels == std::vector<int>{19, 20});
    size_t pairs = 0;
    for (const auto& row : T.rows) {
        bool ok = true;
        for (size_t k = 0; k < 2; ++k) {
            c.eq("row " + std::to_string(row.label) + " eigenvalue " + T.operators[k], E.eigenvalue(row.label, k),
                 row.eigenvalues[k]);
            ok = ok && E.eigenvalue(row.label, k) == row.eigenvalues[k];
        }
        pairs += ok;
    }
    auto q = [](long a, long b) { return QuadExtElem(Rational(a), Rational(b), 193); };
    c.eq("row 12 at (2)", E.eigenvalue(12, 0), q(23319, 162));
    c.eq("row 13 at (2)", E.eigenvalue(13, 0), q(23319, -162));
    c.eq("row 12 at (sqrt(-3))", E.eigenvalue(12, 1), q(4148, 36));
    c.eq("row 13 at (sqrt(-3))", E.eigenvalue(13, 1), q(4148, -36));
    c.truth("eigenvectors verified against both matrices", check_eigensystem(E));
    return finish(c, std::to_string(pairs) + "/20 eigenvalue pairs, spaces 18 x 1 + 1 x 2");
}

Outcome congruence_suite() {
    Checks c;
    const auto& E = fixture_system();
    auto rs = scan_congruences_lemma(E, standard_probes(E.h), 11);
    auto proved = triples(proved_only(rs));
    auto want = triples(fixtures().proved);
    c.truth("proved list " + show(proved) + " vs " + show(want), proved == want);
    std::multiset<std::string> moduli;
    for (const auto& t : proved) moduli.insert(std::get<2>(t));
    c.eq("moduli 809", moduli.count("809"), size_t(3));
    c.eq("moduli 17", moduli.count("17"), size_t(3));
    for (const char* m : {"691", "1847", "73", "61", "41", "11", "59+", "23-"})
        c.truth(std::string("modulus ") + m + " present", moduli.count(m) == 1);
    std::set<Triple> open;
    for (const auto& r : rs)
        if (!r.proved) open.insert({std::min(r.i, r.j), std::max(r.i, r.j), r.modulus.str()});
    c.truth("mod-13 candidate (17,19)", open.count({17, 19, "13"}) == 1);
    c.truth("mod-13 candidate (17,20)", open.count({17, 20, "13"}) == 1);
    auto red = verify_vector_reduction(E, 16, 11, 11);
    c.truth("vector reduction (16,11) mod 11", red.holds);
    c.truth("vector reduction (16,11) fails mod 2", !verify_vector_reduction(E, 16, 11, 2).holds);
    c.truth("vector reduction (16,11) fails mod 3", !verify_vector_reduction(E, 16, 11, 3).holds);
    auto g = difference_gcd(E, 16, 11);
    c.eq("difference gcd (16,11)", g ? factorization_string(factorize(*g)) : std::string("none"), std::string("2^3*3^3*11"));
    return finish(c, std::to_string(proved.size()) + " proved congruences, mod-13 candidate, (16,11) reduction and gcd");
}

Outcome arthur_oracle() {
    Checks c;
    const auto& F = fixtures();
    const auto& s = F.store;
    auto rep = verify_table(F.table, s);
    c.eq("T(2) matches", rep.count("2", RowStatus::match), size_t(20));
    c.eq("T(2) matches through stored traces of rows 12/13/16/18", rep.trace_matches("2"), size_t(4));
    c.eq("T(sqrt(-3)) matches", rep.count("sqrt(-3)", RowStatus::match), size_t(16));
    std::set<int> excluded;
    for (const auto& r : rep.rows)
        if (r.status == RowStatus::excluded) excluded.insert(r.label);
        else if (r.status == RowStatus::mismatch) c.truth("row " + std::to_string(r.label) + " at " + r.op + " mismatches", false);
    c.truth("excluded rows at (sqrt(-3)) are 12, 13, 16, 18", excluded == std::set<int>{12, 13, 16, 18});

    auto param = [&](int label) { return parse_parameter(F.table.rows[static_cast<size_t>(label - 1)].parameter); };
    auto part = [&](int label, size_t k, const EisIdeal& P) {
        return constituent_contribution(param(label).constituents.at(k), P, s);
    };
    auto val = [&](int label, const EisIdeal& P) { return eigenvalue_at(param(label), P, s); };
    auto Q = [](long a) { return QuadExtElem(Integer(a)); };
    auto Q193 = [](long a, long b) { return QuadExtElem(Rational(a), Rational(b), 193); };

    // intermediates at (2)
    c.eq("constant at (2)", eigenvalue_constant(P2()), Integer(1365));
    c.eq("A1 [12]", part(1, 0, P2()), Q(5592405));
    c.eq("A1", val(1, P2()), Q(5593770));
    c.eq("A2 D11", part(2, 0, P2()), Q(-3520));
    c.eq("A2 [10]", part(2, 1, P2()), Q(1398100));
    c.eq("A2", val(2, P2()), Q(1395945));
    c.eq("A4", val(4, P2()), Q(357525));
    c.eq("A7 3D11", part(7, 0, P2()), Q(1988));
    c.eq("A7 3D8[2]", part(7, 1, P2()), Q(160));
    c.eq("A7 [6]", part(7, 2, P2()), Q(87360));
    c.eq("A7", val(7, P2()), Q(90873));
    c.eq("A12 D11,5", part(12, 0, P2()), Q193(34, 162));
    c.eq("A12 [4]", part(12, 2, P2()), Q(21760));
    c.eq("A12", val(12, P2()), Q193(23319, 162));
    c.eq("A13", val(13, P2()), Q193(23319, -162));
    c.eq("A16 D9,3", part(16, 1, P2()), Q(-1280));
    c.eq("A16", val(16, P2()), Q(11925));
    c.eq("A17 psi6[6]", part(17, 0, P2()), Q(87360));
    c.eq("A17", val(17, P2()), Q(176085));
    c.eq("A18 D9,1", part(18, 1, P2()), Q(6208));
    c.eq("A18 3D5[3]", part(18, 2, P2()), Q(-9408));
    c.eq("A18", val(18, P2()), Q(-5355));
    c.eq("A19 3D5*psi6", part(19, 0, P2()), Q(-1792));
    c.eq("A19 psi6[4]", part(19, 1, P2()), Q(21760));
    c.eq("A19", val(19, P2()), Q(108693));
    // rank-4 eigenvalues behind the stored traces: 4 (lambda - 2^6 * 5)
    c.eq("trace D9,1 from 1872", s.u4_trace("D9,1", 2), Q(4 * (1872 - 320)));
    c.eq("trace D9,3 from 0", s.u4_trace("D9,3", 2), Q(4 * (0 - 320)));
    c.eq("D11,5 + cD11,5 traces", s.u4_trace("D11,5", 2) + s.u4_trace("cD11,5", 2) + Q(2560), Q(2628));
    // intermediates at (sqrt(-3))
    c.eq("constant at (sqrt(-3))", eigenvalue_constant(P3()), Integer(728));
    c.eq("A1 [12] at sqrt(-3)", part(1, 0, P3()), Q(265720));
    c.eq("A1 at sqrt(-3)", val(1, P3()), Q(266448));
    c.eq("A2 D11 at sqrt(-3)", part(2, 0, P3()), Q(252));
    c.eq("A2 [10] at sqrt(-3)", part(2, 1, P3()), Q(88572));
    c.eq("A2 at sqrt(-3)", val(2, P3()), Q(89552));
    c.eq("A6 3D10[2] at sqrt(-3)", part(6, 0, P3()), Q(-216));
    c.eq("A6 3D7 at sqrt(-3)", part(6, 1, P3()), Q(-972));
    c.eq("A6 [6] at sqrt(-3)", part(6, 2, P3()), Q(9828));
    c.eq("A6 at sqrt(-3)", val(6, P3()), Q(9368));
    c.eq("A7 3D8[2] at sqrt(-3)", part(7, 1, P3()), Q(1080));
    c.eq("A7 at sqrt(-3)", val(7, P3()), Q(10664));
    c.eq("A19 psi6[4] at sqrt(-3)", part(19, 1, P3()), Q(-3240));
    c.eq("A19 at sqrt(-3)", val(19, P3()), Q(-13312));

    // parameter congruences at (2) and (sqrt(-3))
    auto holds = [&](int i, int j, long q, const std::vector<EisIdeal>& primes) {
        auto rs = verify_parameter_congruence(param(i), param(j), q, primes, s);
        bool any = false, all = true;
        for (const auto& r : rs)
            if (r.checked) any = true, all = all && r.holds;
        return any && all;
    };
    std::vector<EisIdeal> both{P2(), P3()};
    for (auto [i, j, q] : std::vector<std::tuple<int, int, long>>{
             {2, 1, 691}, {4, 1, 1847}, {9, 1, 809}, {3, 1, 73}, {5, 2, 61}, {6, 4, 41}, {2, 3, 17}, {7, 8, 17},
             {14, 15, 17}, {16, 11, 11}, {17, 19, 13}, {17, 20, 13}})
        c.truth("A" + std::to_string(i) + " = A" + std::to_string(j) + " mod " + std::to_string(q), holds(i, j, q, both));

    // Ramanujan: every split and inert prime up to 47, tau from the eta product
    // and checked against the divisor-sum identity
    std::vector<EisIdeal> small;
    for (long p = 2; p <= 47; ++p) {
        if (p == 3 || !is_probable_prime(Integer(p))) continue;
        c.eq("tau(" + std::to_string(p) + ")", s.coefficient(s.form_for(1, 12), static_cast<int>(p)), QuadExtElem(oracle::tau(p)));
        for (const auto& P : classify_prime(p).ideals) small.push_back(P);
    }
    auto rs = verify_parameter_congruence(param(2), param(1), 691, small, s);
    for (const auto& r : rs) c.truth("691 at " + r.prime.str() + " " + r.note, r.checked && r.holds);
    return finish(c, "T(2) 20/20 (4 via stored traces), T(sqrt(-3)) 16/20 with rows 12,13,16,18 excluded, " +
                         std::to_string(small.size()) + " primes for 691");
}

Outcome sym2_factor() {
    Checks c;
    const auto& s = fixtures().store;
    Polynomial P = sym2_euler_factor_at_3(9, s.coefficient(s.form_for(3, 9), 3));
    c.truth("P(X) = 1 + 5022X + 43046721X^2",
            P == Polynomial({Rational(1), Rational(5022), Rational(43046721)}));
    c.eq("P(3^-12)", P.eval(Rational(Rational(1) / Rational(ipow(3, 12)))), make_rational(32 * 23, 729));
    c.eq("P(3^-14)", P.eval(Rational(Rational(1) / Rational(ipow(3, 14)))), make_rational(32 * 125 * 7 * 19, ipow(3, 12)));
    return finish(c, "P(X) = 1 + 5022X + 43046721X^2 and both special values");
}

Outcome small_rank_engine() {
    Checks c;
    auto L2 = HermitianLattice::standard(2);
    std::set<std::string> got;
    for (const auto& N : neighbours(L2, P2()).neighbours) got.insert(lattice_key(N));
    auto want = oracle::neighbours_at_2(L2);
    c.truth("O^2 (2)-neighbours (" + std::to_string(got.size()) + ") equal the exhaustive oracle (" +
                std::to_string(want.size()) + ")",
            got == want && !want.empty());
    auto g4 = enumerate_genus(HermitianLattice::standard(4), P2());
    c.eq("class number of O^4", g4.size(), size_t(1));
    c.eq("oracle frames rank 1", oracle::orthonormal_frames(1), uint64_t(6));
    c.eq("oracle frames rank 2", oracle::orthonormal_frames(2), uint64_t(72));
    c.eq("|Aut O^1|", automorphism_order(HermitianLattice::standard(1)), Integer(6));
    c.eq("|Aut O^2|", automorphism_order(HermitianLattice::standard(2)), Integer(72));
    std::mt19937_64 rng(12);
    for (const auto& L : {HermitianLattice::standard(3), HermitianLattice::standard(2).scaled(to_field(sqrt_minus3())),
                          golay_sqrt3_lattice()}) {
        for (int t = 0; t < 3; ++t) {
            auto M = L.with_coordinates(oracle::random_unimodular(rng, L.rank(), 3 * static_cast<int>(L.rank())));
            c.truth("rebased lattice is the same lattice", same_lattice(L, M));
            c.truth("discriminant invariant", discriminant(M) == discriminant(L));
            c.truth("dual of dual", same_lattice(dual(dual(M)), M));
            c.truth("dual commutes with rebasing", same_lattice(dual(M), dual(L)));
            FactoredIdeal prod;
            for (const auto& x : invariant_factors(dual(M), M)) prod *= x;
            c.truth("invariant factors multiply to the discriminant", prod == discriminant(L));
            Integer det = hermitian_det(M.integral_gram());
            c.eq("disc norm = det^2", discriminant(M).norm(), Rational(det * det));
        }
    }
    return finish(c, "rank-2 neighbours = oracle, h(O^4) = 1, |Aut| 6 and 72, rebasing identities");
}

Outcome golay_genus() {
    Checks c;
    const auto& F = fixtures();
    auto t0 = std::chrono::steady_clock::now();
    GenusOptions gopt;
    gopt.progress = progress;
    auto g = enumerate_genus(golay_sqrt3_lattice(), P2(), gopt);
    c.eq("class count", g.size(), size_t(5));
    auto sa = g.aut_orders, sb = F.aut_L;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    c.truth("Aut orders equal the printed list", sa == sb);
    auto perm = permutation_by_aut_orders(g.aut_orders, F.aut_L);
    HeckeOptions hopt;
    hopt.progress = progress;
    auto D = hecke_direct(g, P2(), hopt);
    auto t1 = std::chrono::steady_clock::now();
    c.truth("hecke_direct reproduces the printed 5 x 5", permute_classes(D, perm).entries == F.t2_5x5.entries);
    auto I = hecke_intertwining(g, P2(), hopt);
    auto t2 = std::chrono::steady_clock::now();
    c.truth("hecke_intertwining reproduces the printed 5 x 5", permute_classes(I.T, perm).entries == F.t2_5x5.entries);
    c.eq("sublattice classes", I.data.aut_L_prime.size(), size_t(25));
    c.eq("d", I.data.d, Integer(2796885));
    auto secs = [](auto a, auto b) { return std::chrono::duration_cast<std::chrono::seconds>(b - a).count(); };
    return finish(c, "5 classes, direct (" + std::to_string(secs(t0, t1)) + " s with genus) and intertwining (" +
                         std::to_string(secs(t1, t2)) + " s) equal the printed T(2)");
}

Outcome unimodular_stretch() {
    Checks c;
    const auto& F = fixtures();
    GenusOptions gopt;
    gopt.progress = progress;
    auto g = enumerate_genus(HermitianLattice::standard(12), P2(), gopt);
    c.eq("class count", g.size(), size_t(20));
    HeckeOptions hopt;
    hopt.progress = progress;
    auto I = hecke_intertwining(g, P3(), hopt);
    c.eq("sublattice classes", I.data.aut_L_prime.size(), size_t(96));
    auto p = match_up_to_relabelling(I.T.entries, F.t3.entries);
    c.truth("T(sqrt(-3)) equals the printed 20 x 20 up to relabelling", p.has_value());
    return finish(c, "20 classes, T(sqrt(-3)) by intertwining");
}

Outcome theta_checks() {
    Checks c;
    auto t12 = theta_degree1(HermitianLattice::standard(12), 2);
    c.eq("r(1) of O^12", t12[1], Integer(72));
    auto t1 = theta_degree1(HermitianLattice::standard(1), 12);
    for (size_t n = 2; n <= 6; ++n) {
        auto a = theta_degree1(HermitianLattice::standard(n), 12);
        auto b = theta_degree1(HermitianLattice::standard(n - 1), 12);
        c.truth("theta(O^" + std::to_string(n) + ") = theta(O^1) theta(O^" + std::to_string(n - 1) + ")", convolve(t1, b) == a);
    }
    std::vector<HermitianLattice> lattices{golay_sqrt3_lattice(), HermitianLattice::standard(12)};
    auto g6 = enumerate_genus(HermitianLattice::standard(6), P2());
    for (const auto& L : g6.representatives) lattices.push_back(L);
    for (const auto& L : lattices) {
        auto t = theta_degree1(L, 3);
        for (size_t n = 1; n < t.coefficients.size(); ++n)
            c.truth("6 | r(" + std::to_string(n) + ") for rank " + std::to_string(L.rank()), t[n] % 6 == 0);
    }
    return finish(c, "r(1) = 72, convolution for O^n, 6 | r(n) on " + std::to_string(lattices.size()) + " lattices");
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        bool gating;
        std::function<Outcome()> run;
    };
    bool stretch = std::getenv("EISENHECKE_ACCEPTANCE_STRETCH") != nullptr;
    std::vector<Criterion> criteria{
        {1, "fixture integrity", true, fixture_integrity},
        {2, "intertwining reconstruction", true, intertwining_reconstruction},
        {3, "spectral reproduction", true, spectral_reproduction},
        {4, "congruence suite", true, congruence_suite},
        {5, "Arthur oracle", true, arthur_oracle},
        {6, "symmetric square Euler factor", true, sym2_factor},
        {7, "small-rank lattice engine", true, small_rank_engine},
        {8, "rank-12 sqrt(-3)-modular genus and T(2)", true, golay_genus},
        {9, "rank-12 unimodular genus and T(sqrt(-3)) [stretch, not gating]", false, unimodular_stretch},
        {10, "theta series", true, theta_checks},
    };
    bool gating_ok = true;
    for (const auto& k : criteria) {
        std::string status, detail;
        auto t0 = std::chrono::steady_clock::now();
        if (k.number == 9 && !stretch) {
            status = "FAIL";
            detail = "not run; set EISENHECKE_ACCEPTANCE_STRETCH=1 to attempt it";
        } else {
            try {
                Outcome o = k.run();
                status = o.pass ? "PASS" : "FAIL";
                detail = o.summary;
            } catch (const std::exception& e) {
                status = "FAIL";
                detail = std::string("exception: ") + e.what();
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (status == "FAIL" && k.gating) gating_ok = false;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f s", secs);
        std::cout << "criterion " << k.number << " " << status << "  " << k.name << " [" << buf << "]: " << detail << std::endl;
    }
    return gating_ok ? 0 : 1;
}
