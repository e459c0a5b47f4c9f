#include <gtest/gtest.h>

#include "hopf/products.hpp"

using namespace hopf;

namespace {

using P = HopfPtr<PrimeField>;
using Pair = MatchedPair<PrimeField>;

// c^i |> g^a x^e = w^{i e} g^a x^e on (H4, k[C_n]), right action trivial
Pair omega_pair(int n, Fp w) {
    PrimeField f(w.modulus());
    auto A = share(sweedler_h4(f));
    auto H = share(group_algebra(cyclic_group(n), f));
    auto mp = trivial_pair(A, H);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < 4; ++a) {
            auto v = A->zero();
            v[a] = a >= 2 ? power(w, i, f.one()) : f.one();
            mp.left[size_t(i) * 4 + a] = v;
        }
    return mp;
}

void expect_axioms(const HopfAlgebra<PrimeField>& E) {
    auto rep = verify_hopf_axioms(E);
    EXPECT_TRUE(rep.ok()) << rep.str();
}

} // namespace

TEST(MatchedPair, TrivialActionsPass) {
    PrimeField f(5);
    auto A = share(sweedler_h4(f));
    auto H = share(group_algebra(symmetric_group(3), f));
    EXPECT_TRUE(verify_matched_pair(trivial_pair(A, H)).ok());
    EXPECT_TRUE(verify_matched_pair(trivial_pair(H, A)).ok());
}

TEST(MatchedPair, OmegaTables) {
    PrimeField f(7);
    EXPECT_TRUE(verify_matched_pair(omega_pair(3, f.from_int(2))).ok());
    auto bad = verify_matched_pair(omega_pair(3, f.from_int(3)));
    EXPECT_FALSE(bad.ok());
    EXPECT_FALSE(bad.left_module.pass);
    EXPECT_EQ(bad.first_failure(), &bad.left_module);
}

TEST(MatchedPair, ShapeMismatchThrows) {
    auto mp = omega_pair(3, PrimeField(7).one());
    mp.left.pop_back();
    EXPECT_THROW(verify_matched_pair(mp), dimension_mismatch);
}

TEST(Bicrossed, TrivialActionsGiveTensorProduct) {
    PrimeField f(5);
    auto A = share(sweedler_h4(f));
    auto H = share(group_algebra(cyclic_group(3), f));
    auto E = bicrossed_product(trivial_pair(A, H));
    EXPECT_TRUE(E.same_structure(tensor_hopf(*A, *H)));
}

TEST(Bicrossed, OmegaRelation) {
    PrimeField f(7);
    auto w = f.from_int(2);
    auto mp = omega_pair(3, w);
    auto E = bicrossed_product(mp);
    expect_axioms(E);
    // index a * 3 + i for the basis vector a c^i
    auto c = E.basis(1), x = E.basis(2 * 3);
    auto lhs = E.mul(c, x);
    auto rhs = E.mul(x, c);
    for (auto& s : rhs) s *= w;
    EXPECT_EQ(lhs, rhs);
    EXPECT_THROW(bicrossed_product(omega_pair(3, f.from_int(3))), precondition_failed);
}

TEST(Bicrossed, AntipodeFromInclusions) {
    PrimeField f(13);
    auto mp = omega_pair(4, f.from_int(5));
    auto E = share(bicrossed_product(mp));
    auto iA = inclusion_a(mp, E), iH = inclusion_h(mp, E);
    EXPECT_TRUE(is_hopf_map(iA));
    EXPECT_TRUE(is_hopf_map(iH));
    EXPECT_TRUE(is_hopf_map(projection_h(mp, E)));
}

TEST(Smash, LeftEqualsBicrossed) {
    PrimeField f(13);
    for (int n = 1; n <= 4; ++n)
        for (auto w : roots_of_unity(f, n)) {
            auto mp = omega_pair(n, w);
            auto S = smash_product(mp, smash_side::left);
            EXPECT_TRUE(S.same_structure(bicrossed_product(mp)));
        }
}

TEST(Smash, RightEqualsBicrossedAndTrivialIsTensor) {
    PrimeField f(7);
    auto A = share(group_algebra(cyclic_group(2), f));
    auto H = share(group_algebra(cyclic_group(3), f));
    // c <| a = c^-1 for the generator a of C2
    std::vector<std::vector<Fp>> table;
    for (int h = 0; h < 3; ++h)
        for (int a = 0; a < 2; ++a) {
            auto v = H->zero();
            v[a ? (3 - h) % 3 : h] = f.one();
            table.push_back(v);
        }
    auto mp = smash_pair(A, H, table, smash_side::right);
    EXPECT_TRUE(verify_smash(mp, smash_side::right).ok());
    auto S = smash_product(mp, smash_side::right);
    expect_axioms(S);
    EXPECT_TRUE(S.same_structure(bicrossed_product(mp)));
    EXPECT_FALSE(S.is_commutative());
    EXPECT_TRUE(smash_product(trivial_pair(A, H), smash_side::left).same_structure(tensor_hopf(*A, *H)));
}

TEST(Smash, CompatibilityFailureIsReported) {
    PrimeField f(7);
    // x |> c = 1 - c breaks the left action conditions
    auto A = share(group_algebra(cyclic_group(2), f));
    auto H = share(sweedler_h4(f));
    auto mp = trivial_pair(A, H);
    auto bad = A->zero();
    bad[0] = f.one();
    bad[1] = f.from_int(-1);
    mp.left[size_t(2) * 2 + 1] = bad; // x |> c = 1 - c
    auto rep = verify_smash(mp, smash_side::left);
    EXPECT_FALSE(rep.ok());
    EXPECT_THROW(smash_product(mp, smash_side::left), precondition_failed);
}

TEST(Double, GroupAlgebras) {
    PrimeField f(7);
    for (auto G : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
        auto H = share(group_algebra(G, f));
        auto [mp, D] = drinfeld_double(H);
        EXPECT_EQ(D.dim(), G.order() * G.order());
        expect_axioms(D);
        EXPECT_TRUE(mp.right_trivial());
        auto gp = group_double_pair(G, f);
        EXPECT_EQ(mp.left, gp.left);
        EXPECT_TRUE(D.same_structure(bicrossed_product(gp)));
    }
}

TEST(Double, GroupDoubleProductRule) {
    PrimeField f(7);
    auto G = symmetric_group(3);
    auto D = bicrossed_product(group_double_pair(G, f));
    int n = G.order();
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    auto p = D.mul(D.basis(h * n + g), D.basis(x * n + y));
                    auto e = D.zero();
                    if (h == G.mul(G.mul(g, x), G.inv(g))) e[h * n + G.mul(g, y)] = f.one();
                    ASSERT_EQ(p, e);
                }
}

TEST(Double, Sweedler) {
    for (std::uint32_t p : {3u, 7u}) {
        PrimeField f(p);
        auto [mp, D] = drinfeld_double(share(sweedler_h4(f)));
        EXPECT_EQ(D.dim(), 16);
        expect_axioms(D);
        EXPECT_FALSE(mp.right_trivial());
    }
}

TEST(SkewPairing, TrivialGivesTensor) {
    PrimeField f(5);
    auto A = share(sweedler_h4(f));
    auto H = share(group_algebra(cyclic_group(2), f));
    auto sp = trivial_pairing(A, H);
    EXPECT_TRUE(verify_skew_pairing(sp).ok());
    auto [mp, D] = double_from_skew_pairing(sp);
    EXPECT_TRUE(mp.left_trivial());
    EXPECT_TRUE(mp.right_trivial());
    EXPECT_TRUE(D.same_structure(tensor_hopf(*A, *H)));
}

TEST(SkewPairing, EvaluationReproducesDouble) {
    PrimeField f(7);
    for (auto G : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
        auto H = share(group_algebra(G, f));
        auto mp0 = double_pair(H);
        auto sp = evaluation_pairing(H, mp0.A);
        EXPECT_TRUE(verify_skew_pairing(sp).ok()) << verify_skew_pairing(sp).str();
        auto [mp, D] = double_from_skew_pairing(sp);
        EXPECT_EQ(mp.left, mp0.left);
        EXPECT_EQ(mp.right, mp0.right);
        EXPECT_TRUE(D.same_structure(bicrossed_product(mp0)));
        // lambda(h, a) = lambda(S h, S a)
        for (int h = 0; h < H->dim(); ++h)
            for (int a = 0; a < H->dim(); ++a) {
                auto sh = H->S(H->basis(h)), sa = mp0.A->S(mp0.A->basis(a));
                auto acc = f.zero();
                for (int i = 0; i < H->dim(); ++i)
                    for (int j = 0; j < H->dim(); ++j) acc += sh[i] * sa[j] * sp.lambda(i, j);
                EXPECT_EQ(acc, sp.lambda(h, a));
            }
    }
}

TEST(SkewPairing, EvaluationOnSweedler) {
    PrimeField f(7);
    auto H = share(sweedler_h4(f));
    auto mp0 = double_pair(H);
    auto sp = evaluation_pairing(H, mp0.A);
    auto [mp, D] = double_from_skew_pairing(sp);
    EXPECT_EQ(mp.left, mp0.left);
    EXPECT_EQ(mp.right, mp0.right);
}

TEST(SkewPairing, SingularIsRejected) {
    PrimeField f(5);
    auto A = share(group_algebra(cyclic_group(2), f));
    auto H = share(group_algebra(cyclic_group(2), f));
    Matrix<Fp> zero(2, 2, f.zero());
    EXPECT_THROW(make_skew_pairing(A, H, zero), precondition_failed);
}

TEST(Mirror, TrivialAndOmegaPairs) {
    PrimeField f(7);
    auto A = share(sweedler_h4(f));
    auto H = share(group_algebra(cyclic_group(3), f));
    auto t = mirror_pair(trivial_pair(A, H));
    EXPECT_TRUE(t.pair.left_trivial());
    EXPECT_TRUE(t.pair.right_trivial());
    for (auto w : roots_of_unity(f, 3)) {
        auto m = mirror_pair(omega_pair(3, w));
        EXPECT_TRUE(verify_matched_pair(m.pair).ok());
        EXPECT_TRUE(is_multiplicative(m.iso));
        EXPECT_TRUE(is_coalgebra_map(m.iso));
        EXPECT_TRUE(is_bijective(m.iso));
    }
}

TEST(Mirror, Doubles) {
    PrimeField f(7);
    for (auto H : {share(group_algebra(symmetric_group(3), f)), share(sweedler_h4(f))}) {
        auto m = mirror_pair(double_pair(H));
        expect_axioms(*m.target);
        EXPECT_TRUE(is_hopf_map(m.iso));
        EXPECT_TRUE(is_bijective(m.iso));
    }
}

TEST(Mirror, MirrorOfMirrorIsIsomorphic) {
    PrimeField f(7);
    auto mp = double_pair(share(sweedler_h4(f)));
    auto m1 = mirror_pair(mp);
    auto m2 = mirror_pair(m1.pair);
    auto both = compose(m2.iso, compose(LinMap<PrimeField>(m1.target, m2.source, identity_matrix(f, 16)), m1.iso));
    EXPECT_TRUE(is_hopf_map(both));
    EXPECT_TRUE(is_bijective(both));
}

// Substituting the cross relation into itself gives a second pair of
// formulas; it is a matched pair, but not the one read off from A |><| H.
TEST(Mirror, NestedFormulaIsADifferentPair) {
    PrimeField f(7);
    auto mp = double_pair(share(sweedler_h4(f)));
    auto nested = mirror_actions_nested(mp);
    EXPECT_TRUE(verify_matched_pair(nested).ok());
    EXPECT_FALSE(nested == mirror_actions(mp));
    auto m = mirror_pair(mp);
    auto T = share(bicrossed_product(nested, false));
    EXPECT_FALSE(is_hopf_map(LinMap<PrimeField>(m.source, T, m.iso.m)));
    auto w = omega_pair(3, f.from_int(2));
    EXPECT_FALSE(mirror_actions_nested(w) == mirror_actions(w));
}

TEST(Factorize, RoundTrips) {
    PrimeField f(7);
    std::vector<Pair> pairs{omega_pair(3, f.from_int(2)), omega_pair(3, f.one()), double_pair(share(sweedler_h4(f))),
                            group_double_pair(cyclic_group(2), f), double_pair(share(group_algebra(symmetric_group(3), f)))};
    for (const auto& mp : pairs) {
        auto E = share(bicrossed_product(mp));
        auto fz = factorize(E, inclusion_a(mp, E), inclusion_h(mp, E));
        EXPECT_EQ(fz.pair.left, mp.left);
        EXPECT_EQ(fz.pair.right, mp.right);
        EXPECT_TRUE(is_bijective(fz.iso));
    }
}

TEST(Factorize, SwappedFactorsGiveMirror) {
    PrimeField f(7);
    auto mp = double_pair(share(sweedler_h4(f)));
    auto E = share(bicrossed_product(mp));
    auto fz = factorize(E, inclusion_h(mp, E), inclusion_a(mp, E));
    auto m = mirror_actions(mp);
    EXPECT_EQ(fz.pair.left, m.left);
    EXPECT_EQ(fz.pair.right, m.right);
}

TEST(Factorize, Rejections) {
    PrimeField f(5);
    auto A = share(sweedler_h4(f));
    auto H = share(group_algebra(cyclic_group(2), f));
    auto mp = trivial_pair(A, H);
    auto E = share(bicrossed_product(mp));
    auto iA = inclusion_a(mp, E);
    // i(A) j(A) does not span E
    EXPECT_THROW(factorize(E, iA, iA), precondition_failed);
    LinMap<PrimeField> triv = trivial_map(H, E);
    EXPECT_THROW(factorize(E, iA, triv), precondition_failed);
}
