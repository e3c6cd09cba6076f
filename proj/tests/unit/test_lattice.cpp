#include <gtest/gtest.h>

#include <random>

#include "eisenhecke/lattice/automorphism.hpp"
#include "eisenhecke/lattice/constructions.hpp"
#include "eisenhecke/lattice/invariants.hpp"
#include "support/oracles.hpp"

using namespace eisen;

namespace {

HermitianLattice gram_lattice(std::initializer_list<std::initializer_list<EisInt>> rows) {
    size_t n = rows.size();
    EisMatrix g(n, n);
    size_t i = 0;
    for (const auto& r : rows) {
        size_t j = 0;
        for (const auto& x : r) g(i, j++) = x;
        ++i;
    }
    return HermitianLattice::from_gram(g);
}

}  // namespace

TEST(Lattice, StandardLatticeBasics) {
    auto L = HermitianLattice::standard(3);
    EXPECT_TRUE(L.is_integral());
    EXPECT_TRUE(L.is_positive_definite());
    EXPECT_TRUE(discriminant(L).is_trivial());
    EXPECT_TRUE(same_lattice(dual(L), L));
}

TEST(Lattice, AutomorphismOrdersSmallRank) {
    // |Aut(O^n)| against a brute-force count of orthonormal frames
    EXPECT_EQ(oracle::orthonormal_frames(1), 6u);
    EXPECT_EQ(oracle::orthonormal_frames(2), 72u);
    EXPECT_EQ(automorphism_order(HermitianLattice::standard(1)), 6);
    EXPECT_EQ(automorphism_order(HermitianLattice::standard(2)), 72);
    EXPECT_EQ(automorphism_order(HermitianLattice::standard(3)), 6 * 6 * 6 * 6);
}

TEST(Lattice, DegenerateAndIndefiniteInputsRejected) {
    EXPECT_THROW(gram_lattice({{{1, 0}, {1, 0}}, {{1, 0}, {1, 0}}}), PreconditionError);
    auto H = gram_lattice({{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
    EXPECT_FALSE(H.is_positive_definite());
    EXPECT_THROW(automorphism_order(H), PreconditionError);
    EisQMatrix g(2, 2);
    g(0, 0) = EisQ(1, 0);
    g(0, 1) = EisQ(0, 1);
    g(1, 0) = EisQ(0, 1);  // not the conjugate of w
    g(1, 1) = EisQ(2, 0);
    EXPECT_THROW(HermitianLattice::from_gram(g), PreconditionError);
}

TEST(Lattice, RandomRebasingPreservesInvariants) {
    std::mt19937_64 rng(20240611);
    std::vector<HermitianLattice> samples{
        HermitianLattice::standard(3),
        gram_lattice({{{2, 0}, {1, 0}, {0, 0}}, {{1, 0}, {2, 0}, {0, 1}}, {{0, 0}, {-1, -1}, {3, 0}}}),
        HermitianLattice::standard(2).scaled(to_field(sqrt_minus3())),
    };
    for (const auto& L : samples) {
        ASSERT_TRUE(L.is_positive_definite());
        Integer aut = automorphism_order(L);
        for (int trial = 0; trial < 4; ++trial) {
            auto M = L.with_coordinates(oracle::random_unimodular(rng, L.rank(), 12));
            EXPECT_TRUE(same_lattice(L, M));
            EXPECT_EQ(discriminant(M), discriminant(L));
            EXPECT_TRUE(same_lattice(dual(dual(M)), M));
            EXPECT_TRUE(same_lattice(dual(M), dual(L)));
            auto f = invariant_factors(dual(M), M);
            FactoredIdeal prod;
            for (const auto& x : f) prod *= x;
            EXPECT_EQ(prod, discriminant(L));
            // the discriminant is generated by det Gram
            Integer det = hermitian_det(M.integral_gram());
            EXPECT_EQ(Rational(det * det), discriminant(M).norm());
            EXPECT_EQ(automorphism_order(M), aut);
            EXPECT_EQ(shell_profile(M.gram64()), shell_profile(L.gram64()));
            auto cert = is_isometric(L, M);
            ASSERT_TRUE(cert.isometric);
            EXPECT_EQ(adjoint(cert.U) * L.integral_gram() * cert.U, M.integral_gram());
        }
    }
}

TEST(Lattice, InvariantFactorsOfScaledLattice) {
    auto L = HermitianLattice::standard(2);
    auto f = invariant_factors(L, L.scaled(EisQ(2, 0)));
    ASSERT_EQ(f.size(), 2u);
    for (const auto& x : f) EXPECT_EQ(x.norm(), 4);
    auto g = invariant_factors(L.scaled(EisQ(2, 0)), L);
    for (const auto& x : g) EXPECT_EQ(x.norm(), Rational(1, 4));
}

TEST(Lattice, NonIsometricWitness) {
    auto A = HermitianLattice::standard(2);
    auto B = gram_lattice({{{1, 0}, {0, 0}}, {{0, 0}, {2, 0}}});
    auto c = is_isometric(A, B);
    EXPECT_FALSE(c.isometric);
    EXPECT_NE(c.witness.find("discriminant"), std::string::npos);
    // same determinant, different short vectors
    auto C = gram_lattice({{{2, 0}, {1, 0}}, {{1, 0}, {2, 0}}});
    auto D = gram_lattice({{{1, 0}, {0, 0}}, {{0, 0}, {3, 0}}});
    auto c2 = is_isometric(C, D);
    EXPECT_FALSE(c2.isometric);
    EXPECT_FALSE(c2.witness.empty());
}

TEST(Lattice, GolayLatticeIsSqrt3Modular) {
    auto L = golay_sqrt3_lattice();
    EXPECT_TRUE(L.is_integral());
    EXPECT_TRUE(L.is_positive_definite());
    EXPECT_EQ(hermitian_det(L.integral_gram()), 729);
    auto d = discriminant(L);
    ASSERT_EQ(d.exponents.size(), 1u);
    EXPECT_EQ(d.exponents.begin()->first.split_type, SplitType::ramified);
    EXPECT_EQ(d.exponents.begin()->second, 12);
    // sqrt(-3) L^# has the same Gram matrix up to isometry
    auto M = dual(L).scaled(to_field(sqrt_minus3()));
    ASSERT_TRUE(M.is_integral());
    EXPECT_TRUE(is_isometric(L, M).isometric);
}

TEST(Lattice, ShortVectorCounts) {
    // r(1) = 6n for O^n; r(2) of O^2 = 36 (pairs of units)
    EXPECT_EQ(norm_counts(HermitianLattice::standard(3).gram64(), 1)[1], 18u);
    EXPECT_EQ(norm_counts(HermitianLattice::standard(2).gram64(), 2)[2], 36u);
    auto vl = enumerate_vectors(HermitianLattice::standard(2), Rational(1), false);
    EXPECT_EQ(vl.size(), 12u);
}

TEST(Lattice, JsonRoundTrip) {
    auto L = golay_sqrt3_lattice();
    auto M = lattice_from_json(lattice_to_json(L));
    EXPECT_TRUE(same_lattice(L, M));
    EXPECT_EQ(M.gram(), L.gram());
}
