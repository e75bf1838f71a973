#include <gtest/gtest.h>
#include <set>

#include <random>

#include "family_points.hpp"
#include "rang/polyring.hpp"

using namespace rang;

using namespace testpts;

TEST(MainP, LeadingCoefficientRow) {
    const MultiPoly& P = main_P();
    MultiPoly a = pvar(VA), b = pvar(VB), c = pvar(VC), d = pvar(VD);
    MultiPoly expected = -b * (a - c) * (b - d) * d;
    MultiPoly got;
    for (auto& [e, co] : P.terms())
        if (e[VX] == 2 && e[VY] == 2 && e[VZ] == 2) {
            MultiPoly::Exp f = e;
            f[VX] = f[VY] = f[VZ] = 0;
            got += MultiPoly::monomial(f, co);
        }
    EXPECT_EQ(got, expected);
}

TEST(MainP, ShapeAndDegrees) {
    const MultiPoly& P = main_P();
    std::set<std::array<int, 3>> xyz;
    for (auto& [e, c] : P.terms()) {
        EXPECT_EQ(e[VA] + e[VB] + e[VC] + e[VD], 4);
        EXPECT_LE(e[VX], 2);
        EXPECT_LE(e[VY], 2);
        EXPECT_LE(e[VZ], 2);
        xyz.insert({e[VX], e[VY], e[VZ]});
    }
    EXPECT_EQ(xyz.size(), 27u);
    EXPECT_EQ(P.degree_in(VX), 2);
    EXPECT_EQ(P.degree_in(VY), 2);
    EXPECT_EQ(P.degree_in(VZ), 2);
}

TEST(MainP, EqualParametersGiveZero) {
    MultiPoly a = pvar(VA);
    std::array<MultiPoly, 7> img;
    for (int i = 0; i < 7; ++i) img[i] = MultiPoly::var(i);
    img[VB] = img[VC] = img[VD] = a;
    EXPECT_TRUE(main_P().substitute(img).is_zero());
}

TEST(MainP, DegenerateEvaluations) {
    std::array<Cyclotomic, 7> ones;
    ones.fill(Cyclotomic(1));
    EXPECT_TRUE(eval(main_P(), ones).is_zero());
    std::array<Cyclotomic, 7> v{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1), Cyclotomic(1), zeta(7, 2), zeta(9, 4), zeta(5, 1)};
    EXPECT_TRUE(eval(main_P(), v).is_zero());
}

TEST(MainP, VanishesOnDecagonalAbcdSolution) {
    EXPECT_TRUE(eval(main_P(), abcd4().as_array()).is_zero());
    EXPECT_TRUE(eval(f_abcd(), abcd4().as_array()).is_zero());
}

TEST(FAbcd, VanishesAtTrivialRoots) {
    std::array<MultiPoly, 7> img;
    for (int i = 0; i < 7; ++i) img[i] = MultiPoly::var(i);
    img[VX] = img[VY] = img[VZ] = MultiPoly(1);
    EXPECT_TRUE(f_abcd().substitute(img).is_zero());
    EXPECT_EQ(f_abcd().size(), 16u);
}

TEST(FAbcd, DividesPOnAbEqualsCd) {
    // on ab = cd the main polynomial vanishes wherever f does: check on the family a = cd/b
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(1, 9);
    for (int it = 0; it < 20; ++it) {
        Rational c = q(dist(rng)), d = q(dist(rng), 2);
        Rational a = 3 * c * d / (c + 2 * d), b = (c + 2 * d) / 3;
        std::array<Cyclotomic, 7> v{a, b, c, d, zeta(6, 1), zeta(6, 1), zeta(6, 2)};
        EXPECT_TRUE(eval(f_abcd(), v).is_zero());
        EXPECT_TRUE(eval(main_P(), v).is_zero());
    }
}

TEST(P32, TermCountAndSpecialisation) {
    std::set<std::array<int, 3>> xyz;
    for (auto& [e, c] : P32().terms()) xyz.insert({e[VX], e[VY], e[VZ]});
    EXPECT_EQ(xyz.size(), 14u);
    MultiPoly::Exp content{};
    MultiPoly spec = P_specialised_to_3plus2(&content);
    // after removing the monomial b·c·x the specialisation is (z − 1)·P32 up to a scalar
    MultiPoly::Exp bcx{};
    bcx[VB] = bcx[VC] = bcx[VX] = 1;
    EXPECT_EQ(content, bcx);
    MultiPoly factor = pvar(VZ) - MultiPoly(1);
    auto [e1, c1] = spec.leading();
    auto [e2, c2] = (factor * P32()).leading();
    EXPECT_EQ(e1, e2);
    EXPECT_EQ(spec * MultiPoly(Rational(c2 / c1)), factor * P32());
}

TEST(Eval, DecicFamilyPointWithRepeatedAngle) {
    // λ = 1, μ = 2 in the ζ10 family: a = −4, b = −5/4
    Rational l = 1, m = 2;
    Cyclotomic tau =
        Cyclotomic(l) * (Cyclotomic(-2) - zeta(10, 2).scaled(2) + zeta(10, 3)) + Cyclotomic(m) * (Cyclotomic(1) + zeta(10, 1));
    Rational a = (4 * l * l - 6 * l * m + m * m) / (3 * l - m);
    Rational b = -5 * l * (l * l + l * m - m * m) / (4 * l * l - 6 * l * m + m * m);
    EXPECT_EQ(a, q(-4));
    EXPECT_EQ(b, q(-5, 4));
    Cyclotomic x = sq_amp(Cyclotomic(1), tau);
    EXPECT_EQ(x, zeta(10, 1));
    Cyclotomic y = sq_amp(tau + Cyclotomic(a), tau + Cyclotomic(b));
    ASSERT_TRUE(as_root_of_unity(y).has_value());
    EXPECT_TRUE(eval(main_P(), {a, b, a, b, x, y, y}).is_zero());
}

TEST(Symmetry, SwapGeneratorOnAbcdSolution) {
    Solution s = apply_symmetry({SymmetryElement::Kind::MainGenerator, 4}, abcd4());
    EXPECT_EQ(s.a, q(3, 2));
    EXPECT_TRUE(eval(main_P(), s.as_array()).is_zero());
}

TEST(Symmetry, InverseGeneratorIsInvolution) {
    Solution s = abcd4();
    Solution t = apply_symmetry({SymmetryElement::Kind::MainGenerator, 3}, apply_symmetry({SymmetryElement::Kind::MainGenerator, 3}, s));
    EXPECT_EQ(t.a, s.a);
    EXPECT_EQ(t.d, s.d);
    EXPECT_EQ(t.x, s.x);
}

TEST(Symmetry, GaloisImageIsSolution) {
    Solution s = apply_symmetry({SymmetryElement::Kind::Galois, 3}, abcd4());
    EXPECT_EQ(s.x, zeta(10, 3));
    EXPECT_TRUE(eval(main_P(), s.as_array()).is_zero());
}

TEST(Symmetry, GeneratorFiveDegenerate) {
    Solution s = abcd4();
    s.b = s.c;  // b − c = 0 kills two entries
    EXPECT_THROW(apply_symmetry({SymmetryElement::Kind::MainGenerator, 5}, s), DegenerateImage);
}

TEST(Symmetry, SignVariantOfGeneratorFiveFails) {
    // (b(b−c)(b−d), a(b−c)(b−d), b(a−c)(d−b), b(a−d)(c−b), y, x, z) is not a symmetry of P
    Solution s = octic_family_solution(1, 3);
    Rational a = s.b * (s.b - s.c) * (s.b - s.d), b = s.a * (s.b - s.c) * (s.b - s.d);
    Rational c = s.b * (s.a - s.c) * (s.d - s.b), d = s.b * (s.a - s.d) * (s.c - s.b);
    EXPECT_FALSE(eval(main_P(), {a, b, c, d, s.y, s.x, s.z}).is_zero());
    Solution t = apply_symmetry({SymmetryElement::Kind::MainGenerator, 5}, s);
    EXPECT_TRUE(eval(main_P(), t.as_array()).is_zero());
    EXPECT_EQ(t.x, s.y.inv());
}

TEST(Symmetry, GeneratorsPreserveGeneratedSolutions) {
    auto sols = generated_solutions(200, 11);
    int checked = 0;
    for (auto& s : sols) {
        ASSERT_TRUE(eval(main_P(), s.as_array()).is_zero());
        for (int g = 1; g <= 5; ++g) {
            Solution t;
            try {
                t = apply_symmetry({SymmetryElement::Kind::MainGenerator, g}, s);
            } catch (const DegenerateImage&) {
                continue;
            }
            ASSERT_TRUE(eval(main_P(), t.as_array()).is_zero()) << "generator " << g;
            EXPECT_NE(t.a * t.b, t.c * t.d) << "generator " << g;
            ++checked;
        }
    }
    EXPECT_GE(checked, 900);
}

TEST(Symmetry, EvalCommutesWithGalois) {
    auto sols = generated_solutions(10, 5);
    for (auto& s : sols)
        for (i64 i : {5, 7, 11, 13}) {
            std::array<Cyclotomic, 7> v = s.as_array();
            for (int k = 4; k < 7; ++k) v[k] = v[k].galois(i);
            // a solution perturbed away from the variety: σ commutes with evaluation
            v[VA] = v[VA] + Cyclotomic(1);
            std::array<Cyclotomic, 7> w = s.as_array();
            w[VA] = w[VA] + Cyclotomic(1);
            EXPECT_EQ(eval(main_P(), w).galois(i), eval(main_P(), v));
        }
}

TEST(Symmetry, TransformedPolynomialsAreMultiples) {
    for (int g = 1; g <= 5; ++g) EXPECT_TRUE(identity_multiple_check(main_P(), transformed_P(g))) << g;
}

TEST(Identity, Examples) {
    EXPECT_TRUE(identity_multiple_check(main_P(), main_P() * MultiPoly(2)));
    EXPECT_FALSE(identity_multiple_check(main_P(), main_P() + MultiPoly(1)));
}

TEST(Tau, AbEqualsCdRejected) { EXPECT_THROW(tau_from_solution(abcd4()), AbEqualsCd); }

TEST(Tau, RecoversAnglesOnGeneratedSolutions) {
    for (auto& s : generated_solutions(60, 17)) {
        Cyclotomic tau = tau_from_solution(s);
        auto t = [&](const Rational& r) { return tau + Cyclotomic(r); };
        EXPECT_EQ(sq_amp(Cyclotomic(1), tau), s.x);
        EXPECT_EQ(sq_amp(t(s.a), t(s.b)), s.y);
        EXPECT_EQ(sq_amp(t(s.c), t(s.d)), s.z);
    }
}

TEST(Tau, OcticFamilyPoint) {
    Solution s = octic_family_solution(1, 2);
    Cyclotomic tau = tau_from_solution(s);
    EXPECT_EQ(sq_amp(Cyclotomic(1), tau), zeta(8, 1));
}

TEST(Tau, ThreePlusTwo) {
    EXPECT_THROW(tau_3plus2(1, zeta(8, 2), zeta(8, 2)), XEqualsY);
    // the right angle sits between τ and τ + a; (1, τ) carries x itself
    Cyclotomic t = tau_3plus2(1, zeta(4, 1), zeta(4, 3));
    EXPECT_EQ(sq_amp(Cyclotomic(1), t), zeta(4, 1));
    EXPECT_EQ(sq_amp(t, t + Cyclotomic(1)), Cyclotomic(-1));
    Cyclotomic u = tau_3plus2(-1, zeta(8, 2), zeta(8, 3));
    // (1, τ, τ − 1) is a rational triple
    for (auto [v1, v2] : {std::pair{Cyclotomic(1), u}, {u, u - Cyclotomic(1)}, {Cyclotomic(1), u - Cyclotomic(1)}})
        EXPECT_TRUE(as_root_of_unity(sq_amp(v1, v2)).has_value());
}

TEST(Text, OneTermPerLine) {
    MultiPoly p = pvar(VA) * MultiPoly(q(1, 2)) + pvar(VX) * pvar(VY) * MultiPoly(q(3, 4));
    EXPECT_EQ(to_text(p), "3 a^0 b^0 c^0 d^0 x^1 y^1 z^0\n2 a^1 b^0 c^0 d^0 x^0 y^0 z^0\n");
    EXPECT_EQ(to_text(MultiPoly()), "");
}
