#pragma once
// The classification data as one immutable registry: the five rational families with both the
// per-theorem and the summary-table forms of every amplitude entry, the named spaces, and the
// exceptional ab = cd configurations.

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "rang/atlas.hpp"

namespace rang {

inline Cyclotomic power_basis(i64 n, std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Cyclotomic::from_power_basis(n, v);
}

namespace detail {

inline Rational q(long a, long b = 1) { return make_rational(a, b); }

inline AngleFormula angle(const std::string& a, const std::string& b) {
    return {a, b, parse_formula(a), parse_formula(b)};
}

inline CurvePoint pt(const Rational& x, const Rational& y) { return CurvePoint::affine(x, y); }

struct EntrySpec {
    std::string id;
    i64 e;
    std::string quartic;
    std::vector<std::pair<std::string, std::string>> angles;
    bool swapped = false;
    std::optional<WeightedPoint> base;
    std::vector<CurveClaim> curves;
    std::vector<WeightedPoint> complete;
    std::string source;
};

inline AmplitudeEntry make_entry(EntrySpec s) {
    AmplitudeEntry e;
    e.id = s.id;
    e.e = s.e;
    e.quartic_text = s.quartic;
    if (!s.quartic.empty()) e.quartic = parse_polynomial(s.quartic);
    for (auto& [a, b] : s.angles) e.angles.push_back(angle(a, b));
    e.swapped = s.swapped;
    e.base_point = s.base;
    e.curves = std::move(s.curves);
    e.complete_point_list = std::move(s.complete);
    e.source = s.source;
    return e;
}

inline CurveClaim claim(WeierstrassCurve E, std::string torsion, std::vector<CurvePoint> tors,
                        std::vector<CurvePoint> gens, std::string source) {
    return {E, std::move(torsion), std::move(tors), std::move(gens), std::move(source)};
}

inline std::vector<FamilyDescriptor> build_families() {
    std::vector<FamilyDescriptor> out;
    const std::string ST = "statement", TB = "table";

    {
        FamilyDescriptor d;
        d.id = "8.1";
        d.n = 8;
        d.k = 1;
        d.tau10 = power_basis(8, {0, 0, 1, -1});
        d.tau01 = power_basis(8, {1, 1});
        d.involution = {q(1), q(1), q(1), q(-1)};
        d.exceptional = {{q(0), q(1)}, {q(1), q(0)}, {q(1), q(1)}, {q(-1), q(1)}};
        auto E2 = WeierstrassCurve::cubic(1, 1, 1);
        WeierstrassCurve E4{2, -6, -2, -3, 0};
        auto E4t = WeierstrassCurve::cubic(1, -13, -21);
        d.entries = {
            make_entry({"8.1/e1", 1, "", {{"(l^2-2l*m-m^2)/(l+m)", "-2(l^3+2l^2m-l*m^2)/(l^2-2l*m-m^2)"}}, false, {}, {}, {}, ST}),
            make_entry({"8.1/e3", 3, "",
                        {{"(-l^2-2l*m+m^2)/(2l)", "-2(l+m)"}, {"-2m", "(l^2+2l*m-m^2)/(m-l)"}}, false, {}, {}, {}, ST}),
            make_entry({"8.1/e2", 2, "l(l^3+l^2m+l*m^2+m^3)", {{"(l^2-m^2-u)/m", "(-2l*m+u)/l"}}, false, {},
                        {claim(E2, "Z/2", {}, {pt(0, 1)}, ST)}, {}, ST}),
            make_entry({"8.1/e2t", 2, "l(l+m)(l^2+m^2)", {{"(l^2-m^2+u)/m", "(-2l*m-u)/l"}}, false,
                        WeightedPoint{0, 1, 0}, {claim(E2, "Z/2", {pt(-1, 0)}, {pt(1, 2)}, TB)}, {}, TB}),
            make_entry({"8.1/e4", 4, "3l^4+2l^3m+4l^2m^2+2l*m^3+m^4",
                        {{"(l^2-2l*m-m^2-u)/(l+m)", "(l^2-2l*m-m^2+u)/(l+m)"}}, false, {},
                        {claim(E4, "Z/2", {}, {pt(0, 2)}, ST)}, {}, ST}),
            make_entry({"8.1/e4t", 4, "(l^2+m^2)(3l^2+2l*m+m^2)",
                        {{"(l^2-2l*m-m^2+u)/(l+m)", "(l^2-2l*m-m^2-u)/(l+m)"}}, false, WeightedPoint{0, 1, 1},
                        {claim(E4t, "Z/2", {pt(-3, 0)}, {pt(5, 8)}, TB)}, {}, TB}),
        };
        out.push_back(std::move(d));
    }
    {
        FamilyDescriptor d;
        d.id = "10.1";
        d.n = 10;
        d.k = 1;
        d.tau10 = power_basis(10, {-2, 0, -2, 1});
        d.tau01 = power_basis(10, {1, 1});
        d.involution = {q(3), q(-1), q(4), q(-3)};
        d.exceptional = {{q(0), q(1)}, {q(1), q(3)}};
        WeierstrassCurve E2{1, -1, 1, 0, 2}, E3{1, -1, 1, 20, 22};
        auto E4 = WeierstrassCurve::cubic(1, -3, -2), E5 = WeierstrassCurve::cubic(0, -50, -125);
        d.entries = {
            make_entry({"10.1/e1", 1, "", {{"(4l^2-6l*m+m^2)/(3l-m)", "-5l(l^2+l*m-m^2)/(4l^2-6l*m+m^2)"}}, false, {}, {}, {}, ST}),
            make_entry({"10.1/e2", 2, "l(3l-m)(11l^2-9l*m+4m^2)",
                        {{"(-2m^2+7l*m-3l^2-u)/(2m-4l)", "(-5l*m+5l^2-u)/(2l)"}}, false, WeightedPoint{0, 1, 0},
                        {claim(E2, "Z/2", {}, {pt(4, 5)}, ST)}, {}, ST}),
            make_entry({"10.1/e2t", 2, "l(3l-m)(11l^2-9l*m+4m^2)",
                        {{"(-3l^2+7l*m-2m^2-u)/(-4l+2m)", "(5l^2-5l*m-u)/(2l)"}}, false, WeightedPoint{0, 1, 0},
                        {claim(E2, "Z/2", {pt(-1, 0)}, {pt(4, 5)}, TB)}, {}, TB}),
            make_entry({"10.1/e3", 3, "41l^4-38l^3m+9l^2m^2+8l*m^3-4m^4",
                        {{"-(l^2+11l*m-6m^2+u)/(2l-4m)", "(9l^2-l*m-4m^2+u)/(4l+2m)"}}, false, WeightedPoint{1, 1, 4},
                        {claim(E3, "Z/4", {pt(4, 10)}, {pt(79, 660)}, ST)}, {}, ST}),
            make_entry({"10.1/e3t", 3, "41l^4-38l^3m+9l^2m^2+8l*m^3-4m^4",
                        {{"(l^2+11l*m-6m^2-u)/(-2l+4m)", "(9l^2-l*m-4m^2-u)/(4l+2m)"}}, false, WeightedPoint{1, 1, 4},
                        {claim(E3, "Z/4", {pt(4, 10)}, {pt(79, -740)}, TB)}, {}, TB}),
            make_entry({"10.1/e4", 4, "(14l^2-6l*m+m^2)(2l^2-2l*m+m^2)",
                        {{"(6l^2-4l*m-m^2+u)/(4l)", "(-2l^2+8l*m-3m^2+u)/(2(m-l))"}}, false, WeightedPoint{0, 1, 1},
                        {claim(E4, "Z/2", {}, {pt(3, -5)}, ST)}, {}, ST}),
            make_entry({"10.1/e4t", 4, "(2l^2-2l*m+m^2)(14l^2-6l*m+m^2)",
                        {{"(6l^2-4l*m-m^2-u)/(4l)", "(-2l^2+8l*m-3m^2-u)/(-2l+2m)"}}, false, WeightedPoint{0, 1, 1},
                        {claim(E4, "Z/2", {pt(-2, 0)}, {pt(3, -5)}, TB)}, {}, TB}),
            make_entry({"10.1/e5", 5, "31l^4-38l^3m+24l^2m^2-7l*m^3+m^4",
                        {{"(4l^2-6l*m+m^2-u)/(3l-m)", "(4l^2-6l*m+m^2+u)/(3l-m)"}}, false, {}, {}, {}, ST}),
            make_entry({"10.1/e5t", 5, "31l^4-38l^3m+24l^2m^2-7l*m^3+m^4",
                        {{"(-4l^2+6l*m-m^2+u)/(-3l+m)", "(-4l^2+6l*m-m^2-u)/(-3l+m)"}}, false, WeightedPoint{0, 1, 1},
                        {claim(E5, "Z/2", {pt(-5, 0)}, {pt(q(-15, 4), q(25, 8))}, TB)}, {}, TB}),
        };
        out.push_back(std::move(d));
    }
    {
        FamilyDescriptor d;
        d.id = "10.2";
        d.n = 10;
        d.k = 2;
        d.tau10 = power_basis(10, {1, 0, 1});
        d.tau01 = power_basis(10, {0, 1});
        d.involution = {q(-1), q(0), q(1), q(1)};
        d.exceptional = {{q(0), q(1)}, {q(1), q(0)}, {q(1), q(-1)}, {q(2), q(-1)}};
        WeierstrassCurve E4{1, 1, 1, 0, 0};
        auto E5 = WeierstrassCurve::cubic(1, -3, -2);
        d.entries = {
            make_entry({"10.2/e2", 2, "", {{"(-2l*m-m^2)/(l+m)", "l(l^2+l*m-m^2)/(m(2l+m))"}}, true, {}, {}, {}, ST}),
            make_entry({"10.2/e4", 4, "l(l^3+2l^2m+5l*m^2+4m^3)", {}, true, WeightedPoint{0, 1, 0},
                        {claim(E4, "Z/4", {pt(0, 0)}, {}, ST)},
                        {{0, 1, 0}, {1, 0, 1}, {1, 0, -1}, {1, -1, 0}}, ST}),
            make_entry({"10.2/e4t", 4, "m(l+m)(4l^2+l*m+m^2)",
                        {{"(-2l^2-l*m+m^2+u)/(2l)", "(-3l*m-m^2-u)/(2m)"}}, false, WeightedPoint{0, 1, 1},
                        {claim(E4, "Z/4", {pt(0, 0)}, {}, TB)}, {}, TB}),
            make_entry({"10.2/e5", 5, "l^4+2l^3m+4l^2m^2+3l*m^3+m^4",
                        {{"(-2l*m-m^2-u)/(l+m)", "(-2l*m-m^2+u)/(l+m)"}}, true, {}, {}, {}, ST}),
            make_entry({"10.2/e5t", 5, "l^4+3l^3m+4l^2m^2+2l*m^3+m^4",
                        {{"(-l^2-2l*m+u)/(l+m)", "(-l^2-2l*m-u)/(l+m)"}}, false, WeightedPoint{0, 1, 1},
                        {claim(E5, "Z/2", {pt(-2, 0)}, {pt(3, -5)}, TB)}, {}, TB}),
        };
        out.push_back(std::move(d));
    }
    {
        FamilyDescriptor d;
        d.id = "12.1";
        d.n = 12;
        d.k = 1;
        d.tau10 = power_basis(12, {0, 1, 1, -1});
        d.tau01 = power_basis(12, {1, 1});
        d.involution = {q(1), q(1), q(0), q(-1)};
        d.exceptional = {{q(0), q(1)}, {q(1), q(0)}, {q(1), q(1)}, {q(-1), q(1)}, {q(-1), q(2)}, {q(-2), q(1)}};
        auto E2 = WeierstrassCurve::cubic(2, 2, 1), E2t = WeierstrassCurve::cubic(-1, 1, 0);
        WeierstrassCurve E3{2, -6, 0, 4, 0};
        auto E3t = WeierstrassCurve::cubic(1, -4, -4);
        auto E4 = WeierstrassCurve::short_form(-18, -27), E6 = WeierstrassCurve::cubic(-1, -4, -2);
        d.entries = {
            make_entry({"12.1/e1", 1, "", {{"-m(2l+m)/(l+m)", "l(2l^2+2l*m-m^2)/(m(2l+m))"}}, false, {}, {}, {}, ST}),
            make_entry({"12.1/e5", 5, "",
                        {{"-l-2m", "(-2l^2-2l*m+m^2)/(l-m)"}, {"(-2l^2-2l*m+m^2)/(2l)", "-2(l+m)"}}, false, {}, {}, {}, ST}),
            make_entry({"12.1/e2", 2, "l(l+m)(l^2+l*m+m^2)", {}, false, WeightedPoint{0, 1, 0},
                        {claim(E2, "Z/4", {}, {}, ST)}, {{1, 0, 1}, {1, 0, -1}, {0, 1, 0}, {-1, 1, 0}}, ST}),
            make_entry({"12.1/e2t", 2, "l(l+m)(l^2+l*m+m^2)", {{"(l^2-m^2+u)/m", "(-l^2-2l*m-u)/l"}}, false,
                        WeightedPoint{0, 1, 0}, {claim(E2t, "Z/4", {pt(1, 1)}, {}, TB)}, {}, TB}),
            make_entry({"12.1/e3", 3, "(2l^2+2l*m+m^2)(2l^2+2l*m+5m^2)", {}, false, WeightedPoint{1, 0, 2},
                        {claim(E3, "Z/2 x Z/2", {}, {}, ST)}, {{1, 0, 2}, {1, 0, -2}, {1, -2, 6}, {1, -2, -6}}, ST}),
            make_entry({"12.1/e3t", 3, "(2l^2+2l*m+m^2)(2l^2+2l*m+5m^2)",
                        {{"(-2l^2-6l*m-m^2+u)/(4l+2m)", "(2l^2-2l*m-3m^2-u)/(2m)"}}, false, WeightedPoint{1, 0, 2},
                        {claim(E3t, "Z/2 x Z/2", {pt(2, 0), pt(-1, 0)}, {}, TB)}, {}, TB}),
            // printed with the label ζ12^6 inside the ζ12^4 item; the amplitude is recomputed
            make_entry({"12.1/e4", 4, "(l^2+l*m+m^2)(5l^2+5l*m+2m^2)",
                        {{"(l^2-2l*m-2m^2+u)/(l+2m)", "-(l^2+4l*m+m^2+u)/(2l+m)"}}, false, WeightedPoint{1, 1, 6},
                        {claim(E4, "Z/2", {}, {pt(-2, 1)}, ST)}, {}, ST}),
            make_entry({"12.1/e4t", 4, "(l^2+l*m+m^2)(5l^2+5l*m+2m^2)",
                        {{"(l^2-2l*m-2m^2+u)/(l+2m)", "(-l^2-4l*m-m^2-u)/(2l+m)"}}, false, WeightedPoint{1, 1, 6},
                        {claim(E4, "Z/2", {pt(-3, 0)}, {pt(6, 9)}, TB)}, {}, TB}),
            make_entry({"12.1/e6", 6, "(l^2+l*m+m^2)(2l^2+2l*m+m^2)",
                        {{"-(m(2l+m)+u)/(l+m)", "(-m(2l+m)+u)/(l+m)"}}, false, WeightedPoint{1, -1, 1},
                        {claim(E6, "Z/2", {}, {pt(q(-3, 4), q(1, 8))}, ST)}, {}, ST}),
            make_entry({"12.1/e6t", 6, "(l^2+l*m+m^2)(2l^2+2l*m+m^2)",
                        {{"(-2l*m-m^2+u)/(l+m)", "(-2l*m-m^2-u)/(l+m)"}}, false, WeightedPoint{0, 1, 1},
                        {claim(E6, "Z/2", {pt(-1, 0)}, {pt(q(-3, 4), q(1, 8))}, TB)}, {}, TB}),
        };
        for (auto& x : d.entries)
            if (x.id == "12.1/e4") x.printed_label = 6;
        out.push_back(std::move(d));
    }
    {
        FamilyDescriptor d;
        d.id = "12.3";
        d.n = 12;
        d.k = 3;
        d.tau10 = power_basis(12, {0, 1, 1});
        d.tau01 = power_basis(12, {1, 0, 0, 1});
        d.involution = {q(-1), q(0), q(1), q(1)};
        d.exceptional = {{q(-2), q(1)}};
        auto E2 = WeierstrassCurve::cubic(-1, 4, 0), E4 = WeierstrassCurve::short_form(9, 54);
        d.entries = {
            make_entry({"12.3/e3", 3, "", {{"-l-2m", "(l^2-2l*m-2m^2)/(l+2m)"}}, false, {}, {}, {}, ST}),
            make_entry({"12.3/e2", 2, "(l^2-l*m-m^2)(l^2+l*m+m^2)",
                        {{"-(2l*m+m^2+u)/(l+m)", "(l^2-m^2-u)/m"}}, false, WeightedPoint{1, 0, 1},
                        {claim(E2, "Z/2", {}, {pt(1, 2)}, ST)}, {}, ST}),
            make_entry({"12.3/e2t", 2, "(l^2-l*m-m^2)(l^2+l*m+m^2)",
                        {{"(-2l*m-m^2-u)/(l+m)", "(l^2-m^2-u)/m"}}, false, WeightedPoint{1, -1, 1},
                        {claim(E2, "Z/2", {pt(0, 0)}, {pt(4, 8)}, TB)}, {}, TB}),
            make_entry({"12.3/e4", 4, "(5l^2-l*m-m^2)(l^2+l*m+m^2)",
                        {{"-(l^2+4l*m+m^2+u)/(2l+m)", "(-2l^2-2l*m+m^2+u)/(l-m)"}}, false, WeightedPoint{1, 1, 3},
                        {claim(E4, "Z/2", {}, {pt(6, 18)}, ST)}, {}, ST}),
            make_entry({"12.3/e4t", 4, "(l^2+l*m+m^2)(5l^2-l*m-m^2)",
                        {{"(-l^2-4l*m-m^2-u)/(2l+m)", "(2l^2+2l*m-m^2-u)/(-l+m)"}}, false, WeightedPoint{1, 1, 3},
                        {claim(E4, "Z/2", {pt(-3, 0)}, {pt(6, 18)}, TB)}, {}, TB}),
            // a conic: u² = 2(λ² + λμ + μ²) with u of weight 1
            make_entry({"12.3/e6", 6, "2(l^2+l*m+m^2)", {}, false, {}, {}, {}, ST}),
        };
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace detail

inline const std::vector<FamilyDescriptor>& families() {
    static const std::vector<FamilyDescriptor> all = detail::build_families();
    return all;
}

inline const FamilyDescriptor& family(const std::string& id) {
    for (auto& d : families())
        if (d.id == id) return d;
    throw UnknownId(id);
}

// ---------------------------------------------------------------- named spaces

/// t·τ + c.
struct SpaceVector {
    Rational t, c;
    Cyclotomic at(const Cyclotomic& tau) const { return Cyclotomic(t) * tau + Cyclotomic(c); }
    std::string str() const;
};

inline std::string SpaceVector::str() const {
    auto r = [](const Rational& x) { return x.get_den() == 1 ? x.get_num().get_str() : x.get_str(); };
    if (sgn(t) == 0) return r(c);
    std::string s = t == 1 ? "τ" : r(t) + "τ";
    if (sgn(c) > 0) s += "+" + r(c);
    if (sgn(c) < 0) s += r(c);
    return s;
}

/// arg(num/den) = pπ/q.
struct ArgumentClaim {
    SpaceVector num, den;
    i64 p, q;
};

struct NamedSpace {
    std::string id;
    i64 n;
    Cyclotomic tau;
    std::vector<std::vector<SpaceVector>> tuples;  // each pairwise rational
    std::set<i64> exponents;                       // claimed squared amplitudes ζ_n^{±e}, folded to e ≤ n/2
    std::vector<ArgumentClaim> arguments;
    std::string source;
    // printed claims contradicted by computation, checked and reported as errata
    std::set<i64> printed_exponents;
    std::optional<std::pair<long, long>> printed_parameter;  // family parameter as printed
    std::string family;                                      // family of printed_parameter
};

struct HomothetyClaim {
    std::string a, b;
    bool homothetic;
    std::string source;
};

namespace detail {

inline SpaceVector V(long t, Rational c) { return {Rational(t), std::move(c)}; }
inline SpaceVector one() { return {Rational(0), Rational(1)}; }
inline SpaceVector T(Rational c = 0) { return {Rational(1), std::move(c)}; }

inline std::vector<NamedSpace> build_named_spaces() {
    std::vector<NamedSpace> out;
    const std::string P32 = "3plus2";
    // the ⟨3⟩ + ⟨2⟩ spaces
    out.push_back({"3plus2.2", 8, power_basis(8, {1, 1, 1}),
                   {{one(), T(), T(-1)}, {T(1), T(q(-1, 2)), T(-2)}},
                   {},
                   {{T(), one(), 1, 4}, {T(-1), one(), 3, 8}, {T(q(-1, 2)), T(1), 1, 8}, {T(-2), T(1), 3, 8}},
                   P32});
    out.push_back({"3plus2.3", 10, power_basis(5, {2, 2, 1}),
                   {{one(), T(), T(-1)}, {T(q(-1, 3)), T(-4), T(q(-5, 4))}},
                   {},
                   {{T(), one(), 3, 10}, {T(-1), one(), 2, 5}, {T(-4), T(q(-1, 3)), 2, 5}, {T(q(-5, 4)), T(q(-1, 3)), 1, 10}},
                   P32});
    out.push_back({"3plus2.4", 10, power_basis(5, {2, 1, 0, 2}),
                   {{one(), T(), T(-1)}, {T(q(-1, 3)), T(-4), T(q(-5, 4))}},
                   {},
                   {{T(), one(), -1, 10}, {T(-1), one(), -4, 5}, {T(-4), T(q(-1, 3)), -4, 5}, {T(q(-5, 4)), T(q(-1, 3)), -7, 10}},
                   P32});
    out.push_back({"3plus2.5", 12, power_basis(12, {-1, -1, 2, 2}),
                   {{one(), T(), T(-1)}, {T(3), T(-2), T(q(-3, 4))}},
                   {},
                   {{T(), one(), 7, 12}, {T(-1), one(), 2, 3}, {T(-2), T(3), 5, 12}, {T(q(-3, 4)), T(3), 1, 3}},
                   P32});

    // n = 10, x = ζ10
    auto half = [](Cyclotomic c, long d) { return c.scaled(q(1, d)); };
    const std::string S101 = "n=10 (x=ζ10) list";
    out.push_back({"101.tau1", 10, half(power_basis(10, {0, 2, -2, 1}), 2),
                   {{one(), T(), T(q(-1, 2))}, {T(q(-5, 8)), T(-2), T(q(-1, 6))}}, {1, 2, 3}, {}, S101});
    out.push_back({"101.tau2", 10, half(power_basis(10, {4, 2, 2, -1}), 2),
                   {{one(), T(), T(q(-5, 2))}, {T(q(-5, 8)), T(q(-15, 2)), T(-2)}}, {1, 2, 3}, {}, S101});
    out.push_back({"101.tau3", 10, half(power_basis(10, {1, 3, -2, 1}), 3),
                   {{one(), T(), T(q(-5, 3)), T(q(-5, 6))}}, {1, 2, 4, 5}, {}, S101});
    out.push_back({"101.tau4", 10, power_basis(10, {1, 1}), {{one(), T(), T(-1), T(-2)}}, {1, 2, 4, 5}, {}, S101});
    out.push_back({"101.tau5", 10, power_basis(10, {-1, 1, -2, 1}),
                   {{one(), T(), T(1)}, {T(q(-1, 2)), T(q(4, 3)), T(5)}}, {1, 3, 4}, {}, S101});
    out.push_back({"101.tau6", 10, power_basis(10, {-3, 1, -4, 2}),
                   {{one(), T(), T(5)}, {T(-10), T(1), T(q(15, 4))}}, {1, 3, 4}, {}, S101});

    // n = 12, x = ζ12
    const std::string S121 = "n=12 (x=ζ12) list";
    out.push_back({"121.tau1", 12, power_basis(12, {1, 0, -1, 1}), {{one(), T(), T(-1), T(q(-1, 2))}}, {1, 2, 5, 6}, {}, S121});
    out.push_back({"121.tau2", 12, power_basis(12, {1, 1}), {{one(), T(), T(-1), T(-2)}}, {1, 2, 5, 6}, {}, S121});
    out.push_back({"121.tau3", 12, half(power_basis(12, {2, 1, -1, 1}), 2),
                   {{one(), T(), T(-1), T(q(-3, 2))}}, {1, 3, 4, 5}, {}, S121, {1, 3, 4, 5, 6}});

    // n = 12, x = ζ12^3
    const std::string S123 = "n=12 (x=ζ12^3) list";
    out.push_back({"123.a", 12, family("12.3").tau10, {{one(), T(), T(-1), T(1)}}, {1, 2, 3, 5}, {}, S123});
    out.push_back({"123.b", 12, family("12.3").tau10 + family("12.3").tau01, {{one(), T(), T(-1), T(-3)}}, {1, 3, 4, 5}, {}, S123});

    // spaces at the exceptional parameters of each family
    auto fam = [](const std::string& id, long l, long m) { return family_tau(family(id), Rational(l), Rational(m)); };
    const std::string EX = "exceptional parameters";
    out.push_back({"8.[0:1]", 8, fam("8.1", 0, 1), {{one(), T(), T(-1), T(-2)}}, {1, 2, 3, 4}, {}, EX});
    out.push_back({"8.[1:0]", 8, fam("8.1", 1, 0), {{T(1), T(-2), T(q(-1, 2))}, {one(), T(), T(-1)}}, {}, {}, EX});
    out.push_back({"101.[0:1]", 10, fam("10.1", 0, 1), {{one(), T(), T(-1), T(-2)}}, {1, 2, 4, 5}, {}, EX});
    out.push_back({"102.[0:1]", 10, fam("10.2", 0, 1), {{one(), T(), T(-1), T(1)}}, {1, 2, 4, 5}, {}, EX});
    out.push_back({"102.[1:0]", 10, fam("10.2", 1, 0), {{one(), T(), T(-1), T(-2)}}, {2, 3, 4, 5}, {}, EX});
    out.push_back({"102.[2:-1]", 10, fam("10.2", 2, -1), {{one(), T()}}, {2}, {}, EX});
    out.push_back({"121.[0:1]", 12, fam("12.1", 0, 1), {{one(), T(), T(-1), T(-2)}}, {1, 2, 5, 6}, {}, EX});
    out.push_back({"121.[1:0]", 12, fam("12.1", 1, 0), {{one(), T(), T(-1), T(-2)}}, {1, 2, 3, 5}, {}, EX});
    out.push_back({"121.[1:1]", 12, fam("12.1", 1, 1), {{one(), T(), T(-3)}, {T(1), T(-4), T(q(-3, 2))}}, {1, 4, 5}, {}, EX});
    // printed under [−1:2]; the triples hold at [−2:1], the ι-partner of [1:1]
    out.push_back({"121.[-2:1]", 12, fam("12.1", -2, 1), {{one(), T(), T(1)}, {T(-3), T(q(3, 4)), T(2)}}, {1, 4, 5}, {}, EX,
                   {}, std::pair<long, long>{-1, 2}, "12.1"});
    out.push_back({"123.[-2:1]", 12, fam("12.3", -2, 1), {{one(), T()}}, {3}, {}, EX});
    return out;
}

inline std::vector<HomothetyClaim> build_homothety_claims() {
    std::vector<HomothetyClaim> out;
    const char* t101[] = {"101.tau1", "101.tau2", "101.tau3", "101.tau4", "101.tau5", "101.tau6"};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            out.push_back({t101[i], t101[j], i % 2 == 0 && j == i + 1, "n=10 (x=ζ10) list"});
    out.push_back({"101.tau1", "3plus2.4", true, "n=10 (x=ζ10) list"});
    out.push_back({"101.tau5", "3plus2.3", true, "n=10 (x=ζ10) list"});
    const char* t121[] = {"121.tau1", "121.tau2", "121.tau3"};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) out.push_back({t121[i], t121[j], i == 0 && j == 1, "n=12 (x=ζ12) list"});
    out.push_back({"8.[1:0]", "3plus2.2", true, "exceptional parameters"});
    return out;
}

}  // namespace detail

inline const std::vector<NamedSpace>& named_spaces() {
    static const std::vector<NamedSpace> all = detail::build_named_spaces();
    return all;
}

inline const NamedSpace& named_space(const std::string& id) {
    for (auto& s : named_spaces())
        if (s.id == id) return s;
    throw UnknownId(id);
}

inline const std::vector<HomothetyClaim>& homothety_claims() {
    static const std::vector<HomothetyClaim> all = detail::build_homothety_claims();
    return all;
}

/// [λ : μ] pairs claimed to give homothetic spaces within a family (exchanged by ι).
struct ParameterPairClaim {
    std::string family;
    long l1, m1, l2, m2;
};

inline const std::vector<ParameterPairClaim>& exceptional_pair_claims() {
    static const std::vector<ParameterPairClaim> all = {
        {"8.1", 0, 1, -1, 1},  {"8.1", 1, 0, 1, 1},   {"10.1", 0, 1, 1, 3},  {"10.2", 1, 0, 1, -1},
        {"12.1", 0, 1, -1, 1}, {"12.1", 1, 1, -2, 1}, {"12.3", 1, 0, 1, -1}, {"12.3", 1, 1, -1, 2},
    };
    return all;
}

}  // namespace rang
