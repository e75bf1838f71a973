#include <gtest/gtest.h>

#include <random>

#include "rang/exactnum.hpp"

using namespace rang;

namespace {

Cyclotomic random_element(std::mt19937_64& rng, i64 n) {
    std::uniform_int_distribution<int> c(-5, 5), d(1, 4);
    std::vector<Rational> v(n);
    for (auto& x : v) x = make_rational(c(rng), d(rng));
    return Cyclotomic::from_power_basis(n, v);
}

}  // namespace

TEST(Zeta, TrivialValues) {
    EXPECT_EQ(zeta(1, 0), Cyclotomic(1));
    EXPECT_EQ(zeta(6, 3), Cyclotomic(-1));
    EXPECT_EQ(zeta(4, 1) * zeta(4, 1), Cyclotomic(-1));
    EXPECT_EQ(zeta(10, 5), Cyclotomic(-1));
    EXPECT_EQ(zeta(10, 2), zeta(5, 1));
}

TEST(Zeta, OrderDividesN) {
    for (i64 n = 1; n <= 40; ++n)
        for (i64 k = 0; k < n; ++k) EXPECT_EQ(n % zeta(n, k).order(), 0) << n << " " << k;
}

TEST(FieldArith, Examples) {
    EXPECT_EQ((Cyclotomic(1) + zeta(4)) * (Cyclotomic(1) - zeta(4)), Cyclotomic(2));
    EXPECT_EQ(zeta(8).inv(), zeta(8, 7));
    EXPECT_TRUE((Cyclotomic(1) + zeta(3) + zeta(3, 2)).is_zero());
    EXPECT_THROW(Cyclotomic(0).inv(), DivisionByZero);
}

TEST(FieldArith, OrderCapIsHardError) {
    i64 saved = order_cap();
    set_order_cap(100);
    EXPECT_THROW(zeta(7) * zeta(11) * zeta(13), OrderOverflow);
    set_order_cap(saved);
}

TEST(FieldArith, RandomAxioms) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ord(1, 60);
    for (int it = 0; it < 1000; ++it) {
        i64 n1 = ord(rng), n2 = ord(rng), n3 = ord(rng);
        if (lcm(lcm(n1, n2), n3) > 600) continue;
        Cyclotomic u = random_element(rng, n1), v = random_element(rng, n2), w = random_element(rng, n3);
        ASSERT_EQ((u * v) * w, u * (v * w));
        ASSERT_EQ((u + v) + w, u + (v + w));
        ASSERT_EQ(u * (v + w), u * v + u * w);
        ASSERT_EQ(u * v, v * u);
        if (!u.is_zero()) ASSERT_EQ(u * u.inv(), Cyclotomic(1));
    }
}

TEST(Galois, Examples) {
    EXPECT_EQ(galois_apply(-1, zeta(5)), zeta(5, 4));
    EXPECT_EQ(galois_apply(2, zeta(5) + zeta(5, 4)), zeta(5, 2) + zeta(5, 3));
    EXPECT_EQ(galois_apply(7, Cyclotomic(make_rational(3, 2))), Cyclotomic(make_rational(3, 2)));
    EXPECT_THROW(galois_apply(5, zeta(10)), NotCoprime);
}

TEST(Galois, HomomorphismAndComposition) {
    std::mt19937_64 rng(11);
    for (i64 n : {5, 7, 8, 9, 12, 15, 16, 20, 21, 24}) {
        for (int it = 0; it < 10; ++it) {
            Cyclotomic u = random_element(rng, n), v = random_element(rng, n);
            for (i64 i : units_mod(n)) {
                ASSERT_EQ(galois_apply(i, u * v), galois_apply(i, u) * galois_apply(i, v));
                ASSERT_EQ(galois_apply(i, u + v), galois_apply(i, u) + galois_apply(i, v));
                for (i64 j : units_mod(n)) ASSERT_EQ(galois_apply(i, galois_apply(j, u)), galois_apply(mod(i * j, n), u));
                ASSERT_EQ(galois_apply(-1, galois_apply(i, u)), galois_apply(-i, u));
            }
            ASSERT_EQ(u.conj().conj(), u);
        }
    }
}

TEST(RootOfUnity, Examples) {
    EXPECT_EQ(as_root_of_unity(zeta(8, 2)), (RootOfUnity{4, 1}));
    Cyclotomic w = (Cyclotomic(-3) + Cyclotomic(4) * zeta(4)).scaled(make_rational(1, 5));
    EXPECT_FALSE(as_root_of_unity(w).has_value());
    EXPECT_EQ(as_root_of_unity(Cyclotomic(1)), (RootOfUnity{1, 0}));
    EXPECT_EQ(as_root_of_unity(Cyclotomic(-1)), (RootOfUnity{2, 1}));
    EXPECT_FALSE(as_root_of_unity(Cyclotomic(2)).has_value());
}

TEST(RootOfUnity, RecoversReducedPair) {
    for (i64 n = 1; n <= 36; ++n)
        for (i64 k = 0; k < n; ++k) {
            i64 g = std::gcd(n, k);
            auto r = as_root_of_unity(zeta(n, k));
            ASSERT_TRUE(r.has_value());
            if (n / g == 1) {
                EXPECT_EQ(*r, (RootOfUnity{1, 0}));
            } else {
                EXPECT_EQ(*r, (RootOfUnity{n / g, k / g})) << n << " " << k;
            }
        }
}

TEST(Embed, Values) {
    auto z = embed(zeta(4), 64);
    EXPECT_NEAR(z.re.convert_to<double>(), 0.0, 1e-15);
    EXPECT_NEAR(z.im.convert_to<double>(), 1.0, 1e-15);
    auto s = embed(zeta(6), 64);
    EXPECT_NEAR(s.re.convert_to<double>(), 0.5, 1e-15);
    EXPECT_NEAR(s.im.convert_to<double>(), 0.86602540378443864676, 1e-15);
    // ζ8² + ζ8 + 1 = 1 + √2/2 + i(1 + √2/2)
    auto t = embed(zeta(8, 2) + zeta(8) + Cyclotomic(1), 256);
    PrecisionScope scope(256);
    Real expect = 1 + sqrt(Real(2)) / 2;
    EXPECT_LT(abs(t.re - expect), Real("1e-70"));
    EXPECT_LT(abs(t.im - expect), Real("1e-70"));
}

TEST(Embed, MultiplicativeToPrecision) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        Cyclotomic u = random_element(rng, 12), v = random_element(rng, 20);
        auto a = embed(u, 200), b = embed(v, 200), c = embed(u * v, 200);
        PrecisionScope scope(200);
        Real re = a.re * b.re - a.im * b.im, im = a.re * b.im + a.im * b.re;
        ASSERT_LT(abs(re - c.re) + abs(im - c.im), Real("1e-50"));
    }
}

TEST(Trace, Examples) {
    EXPECT_EQ(trace_to_Q(zeta(3)), Rational(-1));
    for (i64 n = 1; n <= 30; ++n) EXPECT_EQ(trace_to_Q(Cyclotomic(1), n), Rational(euler_phi(canonical_order(n))));
    EXPECT_EQ(trace_to_Q(zeta(5) + zeta(5, 4)), Rational(-2));
}

TEST(Trace, MatchesGaloisSum) {
    std::mt19937_64 rng(3);
    for (i64 n : {3, 4, 5, 8, 9, 12, 15, 20, 24, 40}) {
        Cyclotomic u = random_element(rng, n);
        Cyclotomic s(0);
        for (i64 i : units_mod(u.order())) s += galois_apply(i, u);
        ASSERT_TRUE(s.is_rational());
        EXPECT_EQ(s.to_rational(), trace_to_Q(u));
    }
}

TEST(RationalSquare, Examples) {
    EXPECT_EQ(rational_is_square(make_rational(9, 4)), std::optional<Rational>(make_rational(3, 2)));
    EXPECT_FALSE(rational_is_square(Rational(2)).has_value());
    EXPECT_EQ(rational_is_square(Rational(0)), std::optional<Rational>(Rational(0)));
    EXPECT_FALSE(rational_is_square(Rational(-4)).has_value());
}

TEST(RationalText, RoundTrip) {
    EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
    EXPECT_EQ(to_string(Rational(5)), "5/1");
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
}

TEST(Minimized, DropsToSmallestField) {
    Cyclotomic u = zeta(5).promote(40);
    EXPECT_EQ(u.order(), 40);
    EXPECT_EQ(u.minimized().order(), 5);
    EXPECT_EQ(u.minimized(), u);
    EXPECT_EQ((zeta(8) + zeta(8, 7)).minimized().order(), 8);
    EXPECT_EQ((zeta(12, 4)).minimized().order(), 3);
}

TEST(SignReal, Certified) {
    Cyclotomic r2 = zeta(8) + zeta(8, 7);  // √2
    EXPECT_EQ(sign_real(r2), 1);
    EXPECT_EQ(sign_real(r2 - Cyclotomic(make_rational(141421, 100000))), 1);
    EXPECT_EQ(sign_real(r2 - Cyclotomic(make_rational(141422, 100000))), -1);
    EXPECT_EQ(sign_real(r2 * r2 - Cyclotomic(2)), 0);
}

TEST(QuadExtTest, ArithmeticAndConjugation) {
    QuadExt s(Cyclotomic(0), Cyclotomic(1), Cyclotomic(5));  // √5
    QuadExt one = s.lift(Cyclotomic(1));
    EXPECT_EQ(s * s, s.lift(Cyclotomic(5)));
    EXPECT_EQ(s * s.inv(), one);
    EXPECT_EQ(s.complex_conj(), s);
    QuadExt t(Cyclotomic(1), Cyclotomic(1), Cyclotomic(-3));  // 1 + √−3
    EXPECT_EQ(t.complex_conj(), t.conj_radical());
    EXPECT_FALSE(t.is_real());
    EXPECT_EQ(sign_real(s - s.lift(Cyclotomic(2))), 1);
}
