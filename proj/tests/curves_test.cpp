#include <gtest/gtest.h>

#include <random>

#include "rang/curves.hpp"

using namespace rang;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
CurvePoint pt(const Rational& x, const Rational& y) { return CurvePoint::affine(x, y); }
WeierstrassCurve gen(long a1, long a2, long a3, long a4, long a6) { return {q(a1), q(a2), q(a3), q(a4), q(a6)}; }
}  // namespace

TEST(GroupLaw, Examples) {
    auto E = WeierstrassCurve::cubic(1, 1, 1);  // y² = x³ + x² + x + 1 = (x+1)(x²+1)
    EXPECT_TRUE(E.contains(pt(0, 1)));
    EXPECT_TRUE(E.contains(pt(1, 2)));
    EXPECT_TRUE(E.add(pt(-1, 0), pt(-1, 0)).infinity);
    EXPECT_EQ(E.add(pt(0, 1), CurvePoint::at_infinity()), pt(0, 1));
    EXPECT_THROW(E.add(pt(0, 2), pt(0, 1)), PointNotOnCurve);
    EXPECT_TRUE(E.add(pt(0, 1), E.negate(pt(0, 1))).infinity);
}

TEST(GroupLaw, AssociativeAndCommutativeOnMultiples) {
    auto E = gen(1, -1, 1, 20, 22);
    CurvePoint P = pt(79, 660), T = pt(4, 10);
    ASSERT_TRUE(E.contains(P));
    ASSERT_TRUE(E.contains(T));
    std::vector<CurvePoint> pts;
    for (int i = -2; i <= 2; ++i)
        for (int j = 0; j < 4; ++j) pts.push_back(E.add(E.multiply(i, P), E.multiply(j, T)));
    std::mt19937 rng(1);
    for (int it = 0; it < 40; ++it) {
        auto& A = pts[rng() % pts.size()];
        auto& B = pts[rng() % pts.size()];
        auto& C = pts[rng() % pts.size()];
        EXPECT_EQ(E.add(E.add(A, B), C), E.add(A, E.add(B, C)));
        EXPECT_EQ(E.add(A, B), E.add(B, A));
        EXPECT_TRUE(E.contains(E.add(A, B)));
    }
    EXPECT_EQ(E.multiply(3, P), E.add(P, E.add(P, P)));
    EXPECT_EQ(E.multiply(-1, P), E.negate(P));
    // the two points with x = 79 are negatives of each other
    EXPECT_EQ(E.negate(P), pt(79, -740));
}

TEST(Torsion, Examples) {
    auto z4 = torsion_subgroup(gen(1, 1, 1, 0, 0));  // y² + xy + y = x³ + x²
    EXPECT_EQ(z4.structure(), "Z/4");
    EXPECT_EQ(small_order(gen(1, 1, 1, 0, 0), pt(0, 0)), 4);

    auto w = WeierstrassCurve::cubic(-1, 1, 0);  // y² = x(x² − x + 1)
    auto t = torsion_subgroup(w);
    EXPECT_EQ(t.structure(), "Z/4");
    EXPECT_EQ(small_order(w, pt(1, 1)), 4);

    auto k = torsion_subgroup(gen(2, -6, 0, 4, 0));  // y² + 2xy = x³ − 6x² + 4x
    EXPECT_EQ(k.structure(), "Z/2 x Z/2");

    auto big = torsion_subgroup(gen(1, -1, 1, 20, 22));
    EXPECT_EQ(big.structure(), "Z/4");
    for (auto& P : big.points) EXPECT_TRUE(gen(1, -1, 1, 20, 22).contains(P));
}

TEST(Torsion, RationalCoefficients) {
    // y² = x³ + x/16 + 1/64 is y² = x³ + x + 1 rescaled by u = 1/2 and has no torsion
    auto plain = torsion_subgroup(WeierstrassCurve::short_form(1, 1));
    auto scaled = torsion_subgroup(WeierstrassCurve::short_form(q(1, 16), q(1, 64)));
    EXPECT_EQ(plain.order(), scaled.order());
    // y² = x³ − x/16 has full 2-torsion
    auto two = torsion_subgroup(WeierstrassCurve::short_form(q(-1, 16), 0));
    EXPECT_EQ(two.n1, 2);
}

TEST(Certificate, Examples) {
    EXPECT_TRUE(certify_infinite_order(gen(1, -1, 1, 0, 2), pt(4, 5)).infinite);
    auto c = certify_infinite_order(gen(1, 1, 1, 0, 0), pt(0, 0));
    EXPECT_FALSE(c.infinite);
    EXPECT_EQ(c.order, 4);
    auto o = certify_infinite_order(gen(1, 1, 1, 0, 0), CurvePoint::at_infinity());
    EXPECT_FALSE(o.infinite);
    EXPECT_EQ(o.order, 1);
    EXPECT_THROW(certify_infinite_order(gen(1, 1, 1, 0, 0), pt(1, 1)), PointNotOnCurve);
}

TEST(Isomorphism, QuarticJacobian) {
    // u² = λ(λ+μ)(λ²+μ²) has Jacobian isomorphic to y² = (x+1)(x²+1)
    auto J = quartic_jacobian({q(1), q(1), q(1), q(1), q(0)});
    EXPECT_TRUE(isomorphic_over_Q(J, WeierstrassCurve::cubic(1, 1, 1)));
    EXPECT_FALSE(isomorphic_over_Q(J, WeierstrassCurve::cubic(-1, 1, 0)));
    // a quadratic twist is not isomorphic over Q
    EXPECT_FALSE(isomorphic_over_Q(WeierstrassCurve::short_form(1, 1), WeierstrassCurve::short_form(4, -8)));
    EXPECT_TRUE(isomorphic_over_Q(WeierstrassCurve::short_form(1, 1), WeierstrassCurve::short_form(16, 64)));
}
