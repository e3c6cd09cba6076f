#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eisenhecke/workbench/fixtures.hpp"

using namespace eisen;

namespace {

const FixtureSet& fixtures() {
    static const FixtureSet F = load_fixtures();
    return F;
}

const EigenSystem& system20() {
    static const EigenSystem E = fixture_eigensystem(fixtures());
    return E;
}

using Triple = std::tuple<int, int, std::string>;

std::set<Triple> triples(const std::vector<CongruenceReport>& rs) {
    std::set<Triple> out;
    for (const auto& r : rs) out.insert({std::min(r.i, r.j), std::max(r.i, r.j), r.modulus.str()});
    return out;
}

std::set<Triple> triples(const std::vector<CongruenceEntry>& rs) {
    std::set<Triple> out;
    for (const auto& r : rs) out.insert({std::min(r.i, r.j), std::max(r.i, r.j), r.modulus.str()});
    return out;
}

QuadExtElem q193(long a, long b) { return QuadExtElem(Rational(a), Rational(b), 193); }

}  // namespace

TEST(Roots, RationalAndQuadraticRoots) {
    // (x - 3)^2 (x + 5) (x^2 - 46638 x + 23319^2 - 162^2 * 193)
    Polynomial p({Rational(-3), Rational(1)});
    p = p * p * Polynomial({Rational(5), Rational(1)});
    Integer c = Integer(23319) * 23319 - Integer(162) * 162 * 193;
    p = p * Polynomial({Rational(c), Rational(-46638), Rational(1)});
    auto r = roots_of(p, 100000);
    std::map<std::string, int> got;
    for (const auto& [x, m] : r.roots) got[x.str()] = m;
    EXPECT_EQ(got.size(), 4u);
    EXPECT_EQ(got[QuadExtElem(3).str()], 2);
    EXPECT_EQ(got[QuadExtElem(-5).str()], 1);
    EXPECT_EQ(got[q193(23319, 162).str()], 1);
    EXPECT_EQ(got[q193(23319, -162).str()], 1);
}

TEST(Roots, CubicFactorUnsupported) {
    Polynomial p({Rational(-2), Rational(0), Rational(0), Rational(1)});
    EXPECT_THROW(roots_of(p, 10), UnsupportedCaseError);
}

TEST(Spectra, FixtureEigenvaluesMatchTable) {
    const auto& E = system20();
    const auto& T = fixtures().table;
    EXPECT_EQ(E.spaces.size(), 19u);
    size_t one = 0, two = 0;
    for (const auto& S : E.spaces) (S.dim() == 1 ? one : two) += 1;
    EXPECT_EQ(one, 18u);
    EXPECT_EQ(two, 1u);
    const auto& block = E.spaces[E.space_of(19)];
    EXPECT_EQ(block.dim(), 2u);
    EXPECT_EQ(block.labels, (std::vector<int>{19, 20}));
    for (const auto& row : T.rows)
        for (size_t k = 0; k < 2; ++k) EXPECT_EQ(E.eigenvalue(row.label, k), row.eigenvalues[k]) << "row " << row.label;
    EXPECT_EQ(E.eigenvalue(12, 0), q193(23319, 162));
    EXPECT_EQ(E.eigenvalue(13, 0), q193(23319, -162));
    EXPECT_EQ(E.eigenvalue(12, 1), q193(4148, 36));
    EXPECT_EQ(E.eigenvalue(13, 1), q193(4148, -36));
    EXPECT_TRUE(check_eigensystem(E));
}

TEST(Spectra, EigenvectorsAreScaledIntegral) {
    const auto& E = system20();
    for (int label = 1; label <= 18; ++label) {
        const auto& v = E.vector(label);
        Integer g = 0;
        for (const auto& x : v) {
            ASSERT_EQ(x.rational_part().get_den(), 1);
            ASSERT_EQ(x.surd_part().get_den(), 1);
            g = gcd(g, gcd(x.rational_part().get_num(), x.surd_part().get_num()));
        }
        EXPECT_EQ(g, 1) << "label " << label;
    }
    // the all-ones vector is the eigenvector of the trivial eigenvalue
    for (const auto& x : E.vector(1)) EXPECT_EQ(x, QuadExtElem(1));
}

TEST(Spectra, NonCommutingInputRejected) {
    HeckeMatrix a{parse_prime_ideal("2"), IntMatrix(2, 2), "fixture", {}};
    HeckeMatrix b = a;
    a.entries(0, 1) = 1;
    b.entries(1, 0) = 1;
    EXPECT_THROW(eigensystem({a, b}), PreconditionError);
}

TEST(Spectra, JsonRoundTrip) {
    const auto& E = system20();
    auto F = eigensystem_from_json(to_json(E));
    EXPECT_EQ(to_json(F), to_json(E));
}

TEST(Congruences, LemmaScanReproducesProvedList) {
    const auto& E = system20();
    auto rs = scan_congruences_lemma(E, standard_probes(E.h), 11);
    EXPECT_EQ(triples(proved_only(rs)), triples(fixtures().proved));
    EXPECT_EQ(proved_only(rs).size(), 16u);
}

TEST(Congruences, ModThirteenCandidate) {
    const auto& E = system20();
    auto rs = scan_congruences_lemma(E, standard_probes(E.h), 11);
    std::set<Triple> open;
    for (const auto& r : rs)
        if (!r.proved) open.insert({std::min(r.i, r.j), std::max(r.i, r.j), r.modulus.str()});
    for (const auto& t : triples(fixtures().candidates)) EXPECT_TRUE(open.count(t)) << std::get<0>(t) << "," << std::get<1>(t);
    for (const auto& t : open) EXPECT_EQ(std::get<2>(t), "13");
}

TEST(Congruences, ScanIsStableUnderProbeChanges) {
    const auto& E = system20();
    auto base = triples(proved_only(scan_congruences_lemma(E, standard_probes(E.h), 11)));
    auto probes = standard_probes(E.h);
    std::reverse(probes.begin(), probes.end());
    EXPECT_EQ(triples(proved_only(scan_congruences_lemma(E, probes, 11))), base);
    // a unimodular change of the probe set: e_i + e_{i+1}, then e_h
    std::vector<std::vector<Integer>> mixed;
    for (size_t i = 0; i + 1 < E.h; ++i) {
        std::vector<Integer> v(E.h, 0);
        v[i] = 1;
        v[i + 1] = 1;
        mixed.push_back(v);
    }
    mixed.push_back(standard_probes(E.h).back());
    EXPECT_EQ(triples(proved_only(scan_congruences_lemma(E, mixed, 11))), base);
}

TEST(Congruences, LargeThreshold) {
    const auto& E = system20();
    auto big = scan_congruences_lemma(E, standard_probes(E.h), 1000);
    EXPECT_EQ(triples(proved_only(big)), (std::set<Triple>{{1, 4, "1847"}}));
    EXPECT_TRUE(scan_congruences_lemma(E, standard_probes(E.h), 1848).empty());
}

TEST(Congruences, DifferenceGcd) {
    const auto& E = system20();
    auto g = difference_gcd(E, 16, 11);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, 2376);
    EXPECT_EQ(factorization_string(factorize(*g)), "2^3*3^3*11");
    auto g21 = difference_gcd(E, 2, 1);
    ASSERT_TRUE(g21.has_value());
    EXPECT_EQ(*g21 % 691, 0);
    EXPECT_EQ(factorize(Integer(5593770 - 1395945)), (std::vector<std::pair<Integer, int>>{{3, 5}, {5, 2}, {691, 1}}));
    EXPECT_FALSE(difference_gcd(E, 19, 20).has_value());
}

TEST(Congruences, VectorReduction) {
    const auto& E = system20();
    auto r = verify_vector_reduction(E, 16, 11, 11);
    EXPECT_TRUE(r.holds);
    EXPECT_NE(r.scalar, 0);
    EXPECT_FALSE(verify_vector_reduction(E, 16, 11, 2).holds);
    EXPECT_FALSE(verify_vector_reduction(E, 16, 11, 3).holds);
    EXPECT_THROW(verify_vector_reduction(E, 12, 13, 11), PreconditionError);
}

TEST(Congruences, CandidatesBeyondTheLemma) {
    const auto& E = system20();
    auto known = scan_congruences_lemma(E, standard_probes(E.h), 11);
    auto c = triples(scan_congruence_candidates(E, 11, known));
    for (const auto& t : c) {
        auto g = difference_gcd(E, std::get<0>(t), std::get<1>(t));
        ASSERT_TRUE(g.has_value());
        EXPECT_EQ(*g % Integer(std::get<2>(t)), 0);
    }
    EXPECT_TRUE(c.count({1, 19, "13"}));
    EXPECT_TRUE(c.count({1, 20, "13"}));
}

TEST(Congruences, ModulusParsing) {
    EXPECT_EQ(parse_modulus("59+").str(), "59+");
    EXPECT_EQ(parse_modulus("691").q, 691);
    EXPECT_EQ(parse_modulus("23-").sign, -1);
}
