#include <gtest/gtest.h>

#include "eisenhecke/workbench/fixtures.hpp"

using namespace eisen;

namespace {

const FixtureSet& fixtures() {
    static const FixtureSet F = load_fixtures();
    return F;
}

GenusEnumeration& genus6() {
    static GenusEnumeration g = enumerate_genus(HermitianLattice::standard(6), parse_prime_ideal("2"));
    return g;
}

}  // namespace

TEST(Hecke, ReconstructSFromPrintedSPrime) {
    const auto& F = fixtures();
    auto r = reconstruct_S_from_Sprime(F.sprime2, F.aut_L, F.aut_L_prime);
    EXPECT_TRUE(r.integral);
    ASSERT_TRUE(r.d.has_value());
    EXPECT_EQ(*r.d, 2796885);
    EXPECT_EQ(r.S(0, 0), 135);
    for (const auto& s : r.row_sums) EXPECT_EQ(s, 2796885);
    ASSERT_TRUE(r.T.has_value());
    EXPECT_EQ(*r.T, F.t2_5x5.entries);
    // and back again
    EXPECT_EQ(sprime_from_s(to_integer_matrix(r.S), F.aut_L, F.aut_L_prime), F.sprime2);
}

TEST(Hecke, ReconstructionDetectsCorruptedAutOrder) {
    const auto& F = fixtures();
    auto aut = F.aut_L_prime;
    aut[3] *= 2;
    auto r = reconstruct_S_from_Sprime(F.sprime2, F.aut_L, aut);
    EXPECT_FALSE(r.integral && r.T && *r.T == F.t2_5x5.entries);
}

TEST(Hecke, PrintedEisensteinMatrixIsWeightedSymmetric) {
    const auto& F = fixtures();
    EXPECT_TRUE(F.t2_5x5.weighted_symmetric(F.aut_L));
    EXPECT_EQ(F.t2_5x5.entries(0, 1), 3888000);
    EXPECT_EQ(F.t2_5x5.entries(1, 0), 1458);
    EXPECT_EQ(make_rational(3888000, F.aut_L[0]), make_rational(1458, F.aut_L[1]));
    EXPECT_EQ(*F.t2_5x5.row_sum(), 5593770);
}

TEST(Hecke, SingleClassGenusIsScalar) {
    auto g = enumerate_genus(HermitianLattice::standard(4), parse_prime_ideal("2"));
    auto P = parse_prime_ideal("2");
    auto T = hecke_direct(g, P);
    ASSERT_EQ(T.size(), 1u);
    EXPECT_EQ(T.entries(0, 0), static_cast<unsigned long>(count_neighbours(g.representatives[0], P).neighbours));
    auto I = hecke_intertwining(g, P);
    EXPECT_EQ(I.T.entries, T.entries);
}

TEST(Hecke, DirectAndIntertwiningAgreeInRankSix) {
    auto& g = genus6();
    auto P = parse_prime_ideal("2");
    auto D = hecke_direct(g, P);
    auto I = hecke_intertwining(g, P);
    EXPECT_EQ(D.entries, I.T.entries);
    ASSERT_TRUE(D.row_sum().has_value());
    // (4^6 - 1)/3 + (2^6 - 1)/3
    EXPECT_EQ(*D.row_sum(), 1365 + 21);
    EXPECT_TRUE(D.weighted_symmetric(g.aut_orders));
    EXPECT_TRUE(is_integer_matrix(I.data.S_prime));
    for (size_t i = 0; i < I.data.S.rows(); ++i) {
        Integer r = 0;
        for (size_t j = 0; j < I.data.S.cols(); ++j) r += I.data.S(i, j);
        EXPECT_EQ(r, I.data.d);
    }
}

TEST(Hecke, OperatorsAtDifferentPrimesCommute) {
    auto& g = genus6();
    auto T2 = hecke_direct(g, parse_prime_ideal("2"));
    auto T3 = hecke_direct(g, parse_prime_ideal("sqrt(-3)"));
    EXPECT_EQ(T2.entries * T3.entries, T3.entries * T2.entries);
    EXPECT_EQ(*T3.row_sum(), static_cast<unsigned long>(count_neighbours(g.representatives[0], parse_prime_ideal("sqrt(-3)")).neighbours));
}

TEST(Hecke, SplitPrimeIntertwiningUnsupported) {
    auto g = enumerate_genus(HermitianLattice::standard(4), parse_prime_ideal("2"));
    EXPECT_THROW(hecke_intertwining(g, parse_prime_ideal("2+3w")), UnsupportedCaseError);
}

TEST(Hecke, JsonRoundTrip) {
    const auto& F = fixtures();
    auto h = hecke_from_json(to_json(F.t2));
    EXPECT_EQ(h.entries, F.t2.entries);
    EXPECT_EQ(h.prime, F.t2.prime);
    EXPECT_THROW(hecke_from_json(nlohmann::json{{"prime", "2"}, {"size", 2}, {"rows", {{1, 2}}}}), PreconditionError);
}
