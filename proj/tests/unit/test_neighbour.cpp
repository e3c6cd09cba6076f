#include <gtest/gtest.h>

#include <set>

#include "eisenhecke/lattice/constructions.hpp"
#include "eisenhecke/neighbour/genus.hpp"
#include "support/oracles.hpp"

using namespace eisen;

TEST(Neighbour, RankTwoAgainstExhaustiveOracle) {
    auto L = HermitianLattice::standard(2);
    auto P = parse_prime_ideal("2");
    NeighbourSet s = neighbours(L, P);
    std::set<std::string> got;
    for (const auto& N : s.neighbours) got.insert(lattice_key(N));
    EXPECT_EQ(got.size(), s.neighbours.size());
    auto expected = oracle::neighbours_at_2(L);
    EXPECT_EQ(got, expected);
    EXPECT_EQ(count_neighbours(L, P).neighbours, s.neighbours.size());
}

TEST(Neighbour, NeighboursAreIntegralWithResidueQuotients) {
    auto L = HermitianLattice::standard(3);
    for (const char* p : {"2", "2+3w"}) {
        auto P = parse_prime_ideal(p);
        NeighbourSet s = neighbours(L, P);
        ASSERT_FALSE(s.neighbours.empty());
        for (const auto& N : s.neighbours) {
            EXPECT_TRUE(N.is_integral());
            EXPECT_TRUE(discriminant(N).is_trivial());
        }
        auto c = count_neighbours(L, P);
        EXPECT_EQ(c.neighbours, s.neighbours.size());
        EXPECT_EQ(c.intersections, s.intersections.size());
    }
}

TEST(Neighbour, RankTwelveCountMatchesTrivialEigenvalue) {
    // number of (2)-neighbours of O^12 = (4^12 - 1)/3 + (2^12 - 1)/3
    auto c = count_neighbours(HermitianLattice::standard(12), parse_prime_ideal("2"));
    EXPECT_EQ(c.neighbours, 5593770u);
}

TEST(Neighbour, PrimeDividingDiscriminantRejected) {
    auto L = golay_sqrt3_lattice();
    EXPECT_THROW(neighbours(L, parse_prime_ideal("sqrt(-3)")), PreconditionError);
    auto S = HermitianLattice::standard(2).scaled(EisQ(2, 0));
    EXPECT_THROW(count_neighbours(S, parse_prime_ideal("2")), PreconditionError);
}

TEST(Genus, RankFourUnimodularHasOneClass) {
    auto g = enumerate_genus(HermitianLattice::standard(4), parse_prime_ideal("2"));
    EXPECT_TRUE(g.closed);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.aut_orders[0], Integer(6 * 6 * 6 * 6) * 24);
}

TEST(Genus, SmallRankNeedsThree) {
    EXPECT_THROW(enumerate_genus(HermitianLattice::standard(2), parse_prime_ideal("2")), UnsupportedCaseError);
}

TEST(Genus, ArchiveRoundTrip) {
    auto dir = std::filesystem::temp_directory_path() / "eisenhecke_genus_archive_test";
    std::filesystem::remove_all(dir);
    GenusOptions opt;
    opt.archive_dir = dir.string();
    auto g = enumerate_genus(HermitianLattice::standard(5), parse_prime_ideal("2"), opt);
    auto h = load_genus_archive(dir.string());
    EXPECT_TRUE(h.closed);
    ASSERT_EQ(h.size(), g.size());
    EXPECT_EQ(h.aut_orders, g.aut_orders);
    for (size_t i = 0; i < g.size(); ++i) EXPECT_EQ(h.representatives[i].gram(), g.representatives[i].gram());
    std::filesystem::remove_all(dir);
}

TEST(Genus, SeedOrderDoesNotChangeClassSet) {
    auto P = parse_prime_ideal("2");
    auto a = enumerate_genus(HermitianLattice::standard(6), P);
    GenusOptions opt;
    opt.shuffle_seed = 7;
    auto b = enumerate_genus(HermitianLattice::standard(6), P, opt);
    ASSERT_EQ(a.size(), b.size());
    auto sa = a.aut_orders, sb = b.aut_orders;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    EXPECT_EQ(sa, sb);
    // mass formula sanity: sum 1/|Aut| is the same
    Rational ma = 0, mb = 0;
    for (const auto& x : a.aut_orders) ma += Rational(1) / Rational(x);
    for (const auto& x : b.aut_orders) mb += Rational(1) / Rational(x);
    EXPECT_EQ(ma, mb);
}
