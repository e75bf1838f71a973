#include <gtest/gtest.h>

#include "rang/verify.hpp"

using namespace rang;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
Cyclotomic C(long a) { return Cyclotomic(Rational(a)); }
}  // namespace

TEST(SquaredAmplitude, Examples) {
    EXPECT_EQ(*squared_amplitude(C(1), zeta(8)), zeta(8, 2));
    EXPECT_EQ(*squared_amplitude(C(1), C(1) + zeta(4)), zeta(4));
    EXPECT_FALSE(squared_amplitude(C(1), C(1) + zeta(4).scaled(2)).has_value());
    // a real ratio gives 1
    EXPECT_EQ(*squared_amplitude(zeta(8), zeta(8).scaled(3)), C(1));
    EXPECT_THROW(squared_amplitude(C(0), C(1)), ZeroVector);
}

TEST(Arguments, Examples) {
    EXPECT_TRUE(has_argument(zeta(8), 1, 4));
    EXPECT_FALSE(has_argument(-zeta(8), 1, 4));
    EXPECT_TRUE(has_argument(-zeta(8), -3, 4));
    EXPECT_EQ(*exponent_mod(zeta(5), 10), 2);
    EXPECT_FALSE(exponent_mod(zeta(8), 10).has_value());
}

TEST(FamilySpace, Examples) {
    EXPECT_EQ(family_space(family("8.1"), 0, 1).tau, C(1) + zeta(8));
    auto s = family_space(family("10.2"), 1, 0);
    EXPECT_EQ(s.tau, C(1) + zeta(10, 2));
    EXPECT_EQ(*squared_amplitude(C(1), s.tau), zeta(10, 2));
    EXPECT_THROW(family_space(family("8.1"), 0, 0), ZeroParameters);
    EXPECT_THROW(family("7.1"), UnknownId);
}

TEST(FamilySpace, AmplitudeOnRandomParameters) {
    for (auto& d : families())
        for (auto& [l, m] : random_parameters(100, 7)) EXPECT_EQ(*squared_amplitude(C(1), family_tau(d, l, m)), zeta(d.n, d.k)) << d.id;
}

TEST(FamilyAngles, SquareValueGivesVerifiedAngles) {
    auto& d = family("8.1");
    auto& e = d.entry("8.1/e2");
    EXPECT_THROW(family_angles(d, e, 1, 1), ExceptionalParameter);
    EXPECT_FALSE(family_angles(d, e, 1, 2).has_value());  // 1 + 2 + 4 + 8 = 15
    // a non-exceptional rational point of the curve
    bool found = false;
    for (auto& p : search_family_points(d, e, 40))
        if (!p.exceptional) {
            auto fa = family_angles(d, e, p.l, p.m);
            ASSERT_TRUE(fa.has_value());
            EXPECT_EQ(fa->angles.size(), 2u);
            EXPECT_TRUE(fa->all_match());
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(FamilyAngles, ParametrisedEntriesAlwaysMatch) {
    for (auto& d : families())
        for (auto& e : d.entries) {
            if (!e.parametrised()) continue;
            for (auto& [l, m] : random_parameters(100, 11)) {
                if (d.is_exceptional(l, m)) {
                    EXPECT_THROW(family_angles(d, e, l, m), ExceptionalParameter);
                    continue;
                }
                try {
                    auto fa = family_angles(d, e, l, m);
                    ASSERT_TRUE(fa.has_value());
                    EXPECT_TRUE(fa->all_match()) << e.id << " at " << show(l) << ":" << show(m);
                } catch (const ExceptionalParameter&) {
                }
            }
        }
}

TEST(FamilyAngles, NoAngleOfOrderTwoForTheCubeRootFamily) {
    auto& d = family("12.3");
    auto& e = d.entry("12.3/e6");
    for (auto& [l, m] : random_parameters(100, 3))
        if (!d.is_exceptional(l, m)) EXPECT_FALSE(family_angles(d, e, l, m).has_value());
}

TEST(FamilyAngles, GenericCheckDetectsAWrongFormula) {
    auto& d = family("8.1");
    AmplitudeEntry bad = d.entry("8.1/e2t");
    std::swap(bad.angles[0].a, bad.angles[0].b);  // reversed orientation gives the conjugate amplitude
    int detected = 0, tried = 0;
    for (auto& [l, m] : random_parameters(20, 5)) {
        if (d.is_exceptional(l, m)) continue;
        auto res = generic_angle_check(d, bad, l, m);
        if (!res) continue;
        ++tried;
        if (!std::all_of(res->begin(), res->end(), [](bool b) { return b; })) ++detected;
    }
    EXPECT_GT(tried, 0);
    EXPECT_EQ(detected, tried);
}

TEST(Homothety, Examples) {
    Cyclotomic t = family_tau(family("8.1"), 2, 5);
    EXPECT_TRUE(homothetic(t, t.scaled(q(3, 7))));
    auto& d = family("8.1");
    for (auto& [l, m] : random_parameters(20, 2))
        EXPECT_TRUE(homothetic(family_tau(d, l, m), family_tau(d, l + m, l - m)));
    Cyclotomic a = zeta(8, 2) + zeta(8) + C(1), b = zeta(5, 2) + zeta(5).scaled(2) + C(2);
    EXPECT_FALSE(homothetic(a, b));
    EXPECT_THROW(homothetic(C(2), a), DegenerateInput);
}

TEST(Homothety, EquivalenceRelationOnSamples) {
    std::vector<Cyclotomic> taus;
    auto& d = family("12.1");
    for (auto& [l, m] : random_parameters(6, 9)) {
        Cyclotomic t = family_tau(d, l, m);
        auto& i = d.involution;
        taus.push_back(t);
        taus.push_back(family_tau(d, i[0] * l + i[1] * m, i[2] * l + i[3] * m));
        taus.push_back(t.scaled(q(-5, 3)));
    }
    const std::size_t n = taus.size();
    std::vector<std::vector<bool>> h(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = homothetic(taus[i], taus[j]);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(h[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(h[i][j], h[j][i]);
            for (std::size_t k = 0; k < n; ++k)
                if (h[i][j] && h[j][k]) EXPECT_TRUE(h[i][k]);
        }
    }
}

TEST(Homothety, QuadraticExtension) {
    auto taus = abcd6_taus(q(260, 17), 1);
    ASSERT_EQ(taus.size(), 2u);
    EXPECT_TRUE(homothetic(taus[0], taus[1]));
    EXPECT_TRUE(homothetic(taus[0], taus[0] * C(3)));
}

TEST(NamedSpaces, Examples) {
    auto& s = named_space("3plus2.2");
    Cyclotomic tau = s.tau;
    EXPECT_EQ(*squared_amplitude(tau + C(1), tau - Cyclotomic(q(1, 2))), zeta(8));
    EXPECT_TRUE(has_argument((tau - Cyclotomic(q(1, 2))) / (tau + C(1)), 1, 8));
    auto r = verify_named_space(named_space("101.tau4"));
    EXPECT_TRUE(r.pass());
    EXPECT_THROW(named_space("101.tau7"), UnknownId);
}

TEST(NamedSpaces, AllPass) {
    for (auto& s : named_spaces()) {
        auto r = verify_named_space(s);
        EXPECT_TRUE(r.pass()) << s.id;
    }
    for (auto& c : homothety_claims()) EXPECT_TRUE(verify_homothety_claim(c).pass()) << c.a << " ~ " << c.b;
}

TEST(Abcd, FamilyExamples) {
    Solution s = abcd_case_tuple('a', 1, 2);
    EXPECT_EQ(s.a, q(6, 5));
    EXPECT_EQ(s.b, q(5, 3));
    EXPECT_TRUE(verify_abcd_family('a', 1, 2).pass());
    auto r = verify_abcd_family('c', 1, 3);
    EXPECT_TRUE(r.pass());
    EXPECT_NE(r.checks[2].detail.find("square 4"), std::string::npos);
    EXPECT_THROW(verify_abcd_family('a', 2, -1), DegenerateParameters);
    EXPECT_THROW(verify_abcd_family('b', 0, 1), DegenerateParameters);
    EXPECT_THROW(verify_abcd_family('c', 2, 3), DegenerateParameters);
    for (auto& [x, y] : random_parameters(30, 4, 40))
        for (char w : {'a', 'b', 'c'}) try {
                EXPECT_TRUE(verify_abcd_family(w, x, y).pass());
            } catch (const DegenerateParameters&) {
            }
}

TEST(Abcd, Geometric) {
    auto no = verify_abcd6_geometric(1, 1);
    EXPECT_TRUE(no.pass());
    EXPECT_TRUE(abcd6_taus(1, 1).empty());
    EXPECT_TRUE(verify_abcd6_geometric(q(260, 17), 1).pass());
    EXPECT_TRUE(verify_abcd4_geometric().pass());
    EXPECT_TRUE(verify_abcd3_geometric(2, -3, 1).pass());
    EXPECT_TRUE(verify_abcd3_geometric(2, 3, 1).pass());
}

TEST(Rectangular, Examples) {
    EXPECT_THROW(rectangular_tau(-1, zeta(6)), std::invalid_argument);
    EXPECT_THROW(rectangular_tau(2, C(1)), std::invalid_argument);
    auto neg = rectangular_tau(-3, C(-1));
    EXPECT_TRUE(neg.purely_imaginary_root);
    EXPECT_FALSE(rectangular_tau(3, C(-1)).purely_imaginary_root);
    for (long a : {2, 3, -2, 5})
        for (i64 k : {1, 2, 4, 5}) {
            auto r = rectangular_tau(a, zeta(6, k));
            EXPECT_EQ(r.purely_imaginary_root, sign_real(r.discriminant) >= 0);
            for (std::size_t i = 0; i < r.roots.size(); ++i) {
                EXPECT_TRUE((r.roots[i] + r.roots[i].complex_conj()).is_zero());
                EXPECT_TRUE(r.amplitude_ok[i]);
            }
        }
}

TEST(Superrectangular, Examples) {
    auto s = superrectangular_space(zeta(4));
    EXPECT_EQ(s.tau, -zeta(4));
    // −ζ4 is ζ4 with the opposite orientation
    EXPECT_EQ(*squared_amplitude(C(1), s.tau + C(1)), zeta(4).conj());
    auto t = superrectangular_space(zeta(6)).tau;
    std::vector<Cyclotomic> quad{C(1), t, t + C(1), t - C(1)};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) EXPECT_TRUE(squared_amplitude(quad[i], quad[j]).has_value());
    // (1, τ+1) carries −y, a different order for y = ζ6; (τ, τ+1) carries y
    EXPECT_EQ(*squared_amplitude(C(1), t + C(1)), -zeta(6));
    EXPECT_EQ(*squared_amplitude(t, t + C(1)), zeta(6));
    auto r = verify_superrectangular(zeta(6));
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.errata(), 1);
    EXPECT_THROW(superrectangular_space(C(-1)), DegenerateInput);
    EXPECT_THROW(superrectangular_space(C(1)), YIsOne);
}

TEST(TwoRightAngles, Examples) {
    EXPECT_EQ(two_right_angles_cm_check(1, -1), -1);
    EXPECT_EQ(two_right_angles_cm_check(2, -3), -6);
    EXPECT_THROW(two_right_angles_cm_check(2, 3), NonNegativeProduct);
}

TEST(CurveClaims, Examples) {
    auto E = WeierstrassCurve::cubic(1, 1, 1);
    EXPECT_TRUE(E.contains(CurvePoint::affine(0, 1)));
    auto P = CurvePoint::affine(-1, 0);
    EXPECT_TRUE(E.add(P, P).infinity);
    auto c = certify_infinite_order(E, P);
    EXPECT_FALSE(c.infinite);
    EXPECT_EQ(c.order, 2);
}

TEST(CurveClaims, AllEntries) {
    std::set<std::string> distinct;
    for (auto& d : families())
        for (auto& e : d.entries)
            for (auto& c : e.curves) {
                distinct.insert(c.curve.str());
                Report r{e.id, "", {}};
                verify_curve_claim(r, c, &e);
                EXPECT_TRUE(r.pass()) << e.id << " " << c.curve.str();
            }
    EXPECT_GE(distinct.size(), 14u);
}

TEST(Searches, Examples) {
    auto& d8 = family("8.1");
    auto pts = search_family_points(d8, d8.entry("8.1/e2"), 10);
    EXPECT_TRUE(std::any_of(pts.begin(), pts.end(), [](const FamilyPoint& p) { return p.l == 1 && p.m == 1 && p.u == 2; }));
    EXPECT_TRUE(search_family_points(family("12.3"), family("12.3").entry("12.3/e6"), 50).empty());
    auto r = verify_complete_list("10.2", "10.2/e4", 30);
    EXPECT_TRUE(r.pass());
    EXPECT_THROW(search_family_points(d8, d8.entry("8.1/e2"), 0), std::invalid_argument);
}

TEST(Searches, NonExceptionalPointsAreVerified) {
    for (auto& d : families())
        for (auto& e : d.entries) {
            if (e.parametrised()) continue;
            for (auto& p : search_family_points(d, e, 25))
                if (!p.exceptional) EXPECT_TRUE(p.verified) << e.id << " at " << show(p.l) << ":" << show(p.m);
        }
}

TEST(Obstruction, TwiceTheNormForm) {
    LPoly f = family("12.3").entry("12.3/e6").quartic;
    EXPECT_TRUE(no_primitive_solutions_mod(f, 4));
    EXPECT_TRUE(no_primitive_solutions_mod(f, 9));
    EXPECT_FALSE(no_primitive_solutions_mod(f, 3));
    EXPECT_FALSE(no_primitive_solutions_mod(family("8.1").entry("8.1/e2t").quartic, 4));
}

TEST(Involution, ScalarIsANonzeroSquare) {
    for (auto& d : families())
        for (auto& e : d.entries) {
            if (e.parametrised() || e.quartic.total_degree() != 4) continue;
            auto s = involution_scalar(e.quartic, entry_involution(d, e));
            ASSERT_TRUE(s.has_value()) << e.id;
            EXPECT_TRUE(sgn(*s) > 0 && rational_is_square(*s)) << e.id;
        }
}

TEST(ProductIdentities, AllClaims) {
    for (auto& c : product_claims()) EXPECT_TRUE(verify_product_claim(c).pass()) << c.entry;
    // a wrong pairing is rejected
    auto& d = family("8.1");
    auto& g = d.entry("8.1/e4").angles[0];
    auto& ab = d.entry("8.1/e1").angles[0];
    EXPECT_FALSE(product_identity(g.a, g.b, d.entry("8.1/e4").quartic, ab.a, ab.a, false));
}

TEST(Registry, TablesAndStatementsAgree) {
    // the two forms of each quartic coincide up to the λ ↔ μ exchange
    for (auto& d : families())
        for (auto& e : d.entries) {
            if (e.source != "table") continue;
            std::string sid = e.id.substr(0, e.id.size() - 1);
            const AmplitudeEntry* st = nullptr;
            for (auto& x : d.entries)
                if (x.id == sid) st = &x;
            if (!st || st->parametrised()) continue;
            for (auto& [l, m] : random_parameters(10, 1)) EXPECT_EQ(quartic_value(e, l, m), quartic_value(*st, l, m)) << e.id;
        }
}

TEST(Registry, VerifyAllHasNoFailuresAndReportsErrata) {
    int errata = 0;
    for (auto& r : verify_all()) {
        EXPECT_EQ(r.failures(), 0) << r.id;
        for (auto& c : r.checks)
            if (c.erratum) {
                ++errata;
                EXPECT_FALSE(c.pass) << r.id << ": " << c.name;
            }
    }
    EXPECT_EQ(errata, 9);  // three printed claims in the families, six superrectangular samples
}
