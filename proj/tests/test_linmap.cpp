#include <gtest/gtest.h>

#include "hopf/enumerate.hpp"
#include "hopf/fixtures.hpp"

using namespace hopf;

namespace {

using P = HopfPtr<PrimeField>;

P h4(std::uint32_t p) { return share(sweedler_h4(PrimeField(p))); }
P kc(int n, std::uint32_t p) { return share(group_algebra(cyclic_group(n), PrimeField(p))); }

} // namespace

TEST(Convolution, IdentityAndAntipode) {
    auto H = h4(5);
    auto id = identity_map(H);
    auto e = trivial_map(H, H);
    EXPECT_EQ(convolve(id, e), id);
    EXPECT_EQ(convolve(e, id), id);
    EXPECT_EQ(convolve(id, antipode_map(H)), e);
    EXPECT_EQ(convolve(antipode_map(H), id), e);
}

TEST(Convolution, CharactersOfC2MultiplyPointwise) {
    PrimeField f(5);
    auto C = kc(2, 5);
    auto K = share(one_dimensional(f));
    // characters k[C2] -> k: c -> 1 and c -> -1
    LinMap<PrimeField> chi0(C, K), chi1(C, K);
    chi0.m(0, 0) = f.one();
    chi0.m(0, 1) = f.one();
    chi1.m(0, 0) = f.one();
    chi1.m(0, 1) = f.from_int(-1);
    EXPECT_EQ(convolve(chi1, chi1), chi0);
    EXPECT_EQ(convolve(chi0, chi1), chi1);
}

TEST(Convolution, AssociativeOnH4Family) {
    auto H = h4(3);
    auto maps = unitary_coalgebra_maps(H, H);
    ASSERT_FALSE(maps.empty());
    for (const auto& a : maps)
        for (const auto& b : maps)
            for (const auto& c : maps) ASSERT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
}

TEST(Predicates, Basic) {
    auto H = h4(5);
    auto z = LinMap<PrimeField>(H, H);
    auto fz = map_predicates(z);
    EXPECT_FALSE(fz.is_coalgebra_map);
    EXPECT_FALSE(fz.is_unitary);
    auto ft = map_predicates(trivial_map(H, H));
    EXPECT_TRUE(ft.hopf());
    EXPECT_TRUE(map_predicates(identity_map(H)).hopf());
    // S is an anti-algebra map; on H4 it is not multiplicative
    EXPECT_FALSE(is_multiplicative(antipode_map(H)));
}

TEST(Cocentral, Examples) {
    PrimeField f(5);
    auto C = kc(3, 5);
    auto H = h4(5);
    for (const auto& r : unitary_coalgebra_maps(C, H)) EXPECT_TRUE(is_cocentral(r));
    EXPECT_TRUE(is_cocentral(trivial_map(H, H)));
    // u(x) = x, u(g) = g: the identity is not cocentral on H4
    EXPECT_FALSE(is_cocentral(identity_map(H)));
    auto cocentral = unitary_coalgebra_maps(H, H, true);
    EXPECT_EQ(cocentral.size(), 1u);
}

TEST(Grouplikes, Examples) {
    auto H = h4(3);
    auto G = grouplikes(*H);
    ASSERT_EQ(G.size(), 2u);
    EXPECT_EQ(G[0], H->basis(0));
    EXPECT_EQ(G[1], H->basis(1));
    auto GE = grouplikes_exhaustive(*H);
    std::sort(GE.begin(), GE.end());
    auto GS = G;
    std::sort(GS.begin(), GS.end());
    EXPECT_EQ(GE, GS);
    EXPECT_EQ(grouplikes(*kc(5, 3)).size(), 5u);
    auto T = tensor_hopf(*H, *kc(2, 3));
    auto GT = grouplikes_exhaustive(T);
    EXPECT_EQ(GT.size(), 4u);
    for (const auto& a : GT)
        for (const auto& b : GT) EXPECT_NE(std::find(GT.begin(), GT.end(), T.mul(a, b)), GT.end());
}

TEST(Grouplikes, HintIsVerifiedAndInfiniteFieldNeedsOne) {
    RationalField q;
    auto H = dual_hopf(group_algebra(cyclic_group(2), q));
    EXPECT_THROW(grouplikes(H), budget_exceeded);
    std::vector<std::vector<Rational>> hint{{1, 1}, {1, -1}};
    EXPECT_EQ(grouplikes(H, &hint).size(), 2u);
    std::vector<std::vector<Rational>> bad{{1, 0}};
    EXPECT_THROW(grouplikes(H, &bad), precondition_failed);
}

TEST(SkewPrimitives, Examples) {
    PrimeField f(7);
    auto H = h4(7);
    auto one = H->basis(0), g = H->basis(1);
    EXPECT_TRUE(skew_primitives(*H, one, one).empty());
    auto P = skew_primitives(*H, one, g);
    EXPECT_EQ(P.size(), 2u);
    // every basis element of the span satisfies the defining identity
    for (const auto& x : P) {
        auto dx = H->delta(x);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) EXPECT_EQ(dx[a * 4 + b], x[a] * one[b] + g[a] * x[b]);
    }
    // P_{g,1} = span{1 - g, gx}
    EXPECT_EQ(skew_primitives(*H, g, one).size(), 2u);
    EXPECT_TRUE(skew_primitives(*H, g, g).empty());
    auto C = kc(4, 7);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto Q = skew_primitives(*C, C->basis(i), C->basis(j));
            EXPECT_EQ(Q.size(), i == j ? 0u : 1u);
            if (i != j) {
                EXPECT_TRUE(Q[0][i] == -Q[0][j]);
                EXPECT_FALSE(Q[0][i].is_zero());
            }
        }
    EXPECT_THROW(skew_primitives(*H, H->basis(2), one), precondition_failed);
}

TEST(Enumeration, StructuredAgreesWithExhaustiveOracle) {
    auto H = h4(3);
    EXPECT_EQ(unitary_coalgebra_maps(H, H), exhaustive_unitary_coalgebra_maps(H, H));
    auto C = kc(3, 3);
    EXPECT_EQ(unitary_coalgebra_maps(C, H), exhaustive_unitary_coalgebra_maps(C, H));
    EXPECT_EQ(unitary_coalgebra_maps(H, C), exhaustive_unitary_coalgebra_maps(H, C));
    auto H5 = h4(5);
    EXPECT_EQ(unitary_coalgebra_maps(H5, H5), exhaustive_unitary_coalgebra_maps(H5, H5));
    auto C2 = kc(2, 5);
    EXPECT_EQ(unitary_coalgebra_maps(C2, H5), exhaustive_unitary_coalgebra_maps(C2, H5));
}

TEST(Enumeration, OracleRefusesLargeInstances) {
    auto H = h4(7);
    EXPECT_THROW(exhaustive_unitary_coalgebra_maps(H, H), precondition_failed);
    auto C = kc(5, 3);
    auto H3 = h4(3);
    EXPECT_THROW(exhaustive_unitary_coalgebra_maps(C, H3), precondition_failed);
}

TEST(Enumeration, BudgetIsEnforced) {
    setenv("HOPF_SEARCH_BUDGET", "10", 1);
    auto H = h4(5);
    EXPECT_THROW(unitary_coalgebra_maps(H, H), budget_exceeded);
    unsetenv("HOPF_SEARCH_BUDGET");
    EXPECT_NO_THROW(unitary_coalgebra_maps(H, H));
}

TEST(HopfMaps, Examples) {
    auto H = h4(5);
    auto aut = hopf_maps(H, H);
    int bij = 0;
    for (const auto& m : aut) bij += is_bijective(m);
    EXPECT_EQ(bij, 4);
    for (int n : {1, 3, 5}) {
        auto maps = hopf_maps(H, kc(n, 5));
        ASSERT_EQ(maps.size(), 1u);
        EXPECT_EQ(maps[0], trivial_map(H, kc(n, 5)));
    }
    for (int n : {2, 4, 6}) {
        auto C = kc(n, 5);
        auto maps = hopf_maps(C, H);
        ASSERT_EQ(maps.size(), 2u) << n;
        for (const auto& m : maps) EXPECT_TRUE(is_hopf_map(m));
    }
    EXPECT_EQ(hopf_maps(kc(3, 5), H).size(), 1u);
}

TEST(HopfMaps, AgreeWithFilteredCoalgebraMaps) {
    auto H = h4(3);
    auto C = kc(2, 3);
    for (auto [d, c] : {std::pair{H, H}, std::pair{C, H}, std::pair{H, C}}) {
        std::vector<LinMap<PrimeField>> filtered;
        for (const auto& m : exhaustive_unitary_coalgebra_maps(d, c))
            if (is_multiplicative(m)) filtered.push_back(m);
        EXPECT_EQ(hopf_maps(d, c), filtered);
    }
}

TEST(CoZ1, Sizes) {
    for (int n = 1; n <= 5; ++n) {
        auto T = coz1_group(kc(n, 5), h4(5));
        EXPECT_EQ(T.order(), 1 << (n - 1)) << n;
    }
    EXPECT_EQ(coz1_group(h4(5), h4(5)).order(), 1);
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(coz1_group(h4(5), kc(n, 5)).order(), 1);
}

TEST(CoZ1, MembersSatisfyInvolutionAndGroupAxioms) {
    auto A = h4(7);
    auto T = coz1_group(kc(4, 7), A);
    auto S2 = compose(antipode_map(A), antipode_map(A));
    for (const auto& r : T.elements) EXPECT_EQ(compose(S2, r), r);
    EXPECT_EQ(T.elements[T.identity], trivial_map(kc(4, 7), A));
    for (int a = 0; a < T.order(); ++a) EXPECT_EQ(T.table[a][T.inverse[a]], T.identity);
}

TEST(CoZ1, IncompleteCandidatesAreRejected) {
    auto C = kc(3, 5);
    auto A = h4(5);
    auto all = unitary_coalgebra_maps(C, A, true);
    ASSERT_GT(all.size(), 2u);
    // the trivial map and two others; CoZ1(k[C3], H4) is C2 x C2, so their product is missing
    std::vector<LinMap<PrimeField>> partial{trivial_map(C, A)};
    for (const auto& m : all)
        if (!(m == trivial_map(C, A)) && partial.size() < 3) partial.push_back(m);
    EXPECT_THROW(coz1_group(C, A, partial), error);
}
