#pragma once
// Rational angles in spaces ⟨1, τ⟩_Q: squared amplitudes, homothety, the rationally
// parametrised families with their quartic forms, and the rectangular and CM constructions.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rang/curves.hpp"
#include "rang/exactnum.hpp"
#include "rang/formula.hpp"

namespace rang {

struct ZeroVector : std::domain_error {
    ZeroVector() : std::domain_error("zero vector") {}
};
struct ZeroParameters : std::domain_error {
    ZeroParameters() : std::domain_error("(λ, μ) = (0, 0)") {}
};
struct ExceptionalParameter : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnknownId : std::invalid_argument {
    explicit UnknownId(const std::string& id) : std::invalid_argument("unknown id: " + id) {}
};
struct DegenerateInput : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateParameters : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonNegativeProduct : std::domain_error {
    NonNegativeProduct() : std::domain_error("b0·b1 must be negative") {}
};
struct YIsOne : std::domain_error {
    YIsOne() : std::domain_error("y must differ from 1") {}
};

// ---------------------------------------------------------------- amplitudes and arguments

/// conj(w)/w for w = v1/v2, when that is a root of unity.
inline std::optional<Cyclotomic> squared_amplitude(const Cyclotomic& v1, const Cyclotomic& v2) {
    if (v1.is_zero() || v2.is_zero()) throw ZeroVector();
    Cyclotomic w = v1 / v2;
    Cyclotomic r = w.conj() / w;
    if (!as_root_of_unity(r)) return std::nullopt;
    return r;
}

/// Same for elements of a quadratic extension; returns conj(w)/w as an element of the extension.
inline std::optional<QuadExt> squared_amplitude(const QuadExt& v1, const QuadExt& v2) {
    if (v1.is_zero() || v2.is_zero()) throw ZeroVector();
    QuadExt w = v1 / v2;
    QuadExt r = w.complex_conj() / w;
    // only roots of unity of the cyclotomic base field are recognised
    if (!r.q().is_zero() || !as_root_of_unity(r.p())) return std::nullopt;
    return r;
}

/// ζ_n^e as the pair (e mod n) when u is an n-th root of unity; empty otherwise.
inline std::optional<i64> exponent_mod(const Cyclotomic& u, i64 n) {
    auto r = as_root_of_unity(u);
    if (!r || n % r->order != 0) return std::nullopt;
    return mod(r->exponent * (n / r->order), n);
}

/// arg(w) = pπ/q modulo 2π: w·ζ_{2q}^{−p} is real and positive.
inline bool has_argument(const Cyclotomic& w, i64 p, i64 q) {
    if (w.is_zero()) throw ZeroVector();
    Cyclotomic z = w * zeta(2 * q, -p);
    return z.is_real() && sign_real(z) > 0;
}

// ---------------------------------------------------------------- spaces and homothety

struct Space {
    i64 n = 1;
    Cyclotomic tau;
    std::string provenance;
};

struct RationalAngle {
    Cyclotomic v1, v2;
    Cyclotomic squared_amplitude;
};

namespace detail {
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t cols = 0;
    for (auto& r : rows) cols = std::max(cols, r.size());
    for (auto& r : rows) r.resize(cols);
    int rank = 0;
    const int n = static_cast<int>(rows.size());
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (sgn(rows[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int r = 0; r < n; ++r)
            if (r != rank && sgn(rows[r][c]) != 0) {
                Rational f = rows[r][c] / rows[rank][c];
                for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
            }
        ++rank;
    }
    return rank;
}

inline std::vector<Rational> power_coords(const Cyclotomic& u, i64 m) {
    auto c = u.promote(m).coeffs();
    c.resize(static_cast<std::size_t>(euler_phi(m)));
    return c;
}
}  // namespace detail

/// ⟨1, τ1⟩ and ⟨1, τ2⟩ are homothetic iff 1, τ1, τ2, τ1τ2 are Q-linearly dependent.
inline bool homothetic(const Cyclotomic& t1, const Cyclotomic& t2) {
    if (t1.is_real() || t2.is_real()) throw DegenerateInput("τ must not be real");
    const i64 m = canonical_order(lcm(t1.order(), t2.order()));
    std::vector<std::vector<Rational>> rows;
    for (const Cyclotomic& v : {Cyclotomic(1), t1, t2, t1 * t2}) rows.push_back(detail::power_coords(v, m));
    return detail::rational_rank(std::move(rows)) < 4;
}

/// The same test in Q(ζ)(√δ); both elements must use the same radicand δ, which must not be a
/// square in the cyclotomic base field.
inline bool homothetic(const QuadExt& t1, const QuadExt& t2) {
    if (t1.is_real() || t2.is_real()) throw DegenerateInput("τ must not be real");
    if (!(t1.delta() == t2.delta())) throw DegenerateInput("different radicands");
    std::vector<QuadExt> v{t1.lift(Cyclotomic(1)), t1, t2, t1 * t2};
    i64 m = t1.delta().order();
    for (auto& x : v) m = lcm(m, lcm(x.p().order(), x.q().order()));
    m = canonical_order(m);
    std::vector<std::vector<Rational>> rows;
    for (auto& x : v) {
        auto a = detail::power_coords(x.p(), m), b = detail::power_coords(x.q(), m);
        a.insert(a.end(), b.begin(), b.end());
        rows.push_back(std::move(a));
    }
    return detail::rational_rank(std::move(rows)) < 4;
}

// ---------------------------------------------------------------- families

struct CurveClaim {
    WeierstrassCurve curve;
    std::string torsion;                      // claimed torsion structure, e.g. "Z/2"
    std::vector<CurvePoint> torsion_points;   // claimed torsion generators
    std::vector<CurvePoint> free_generators;  // claimed generators of infinite order
    std::string source;
};

/// a(λ, μ, u) and b(λ, μ, u) for the '+' branch; the '−' branch is u ↦ −u.
struct AngleFormula {
    std::string a_text, b_text;
    RatFunc a, b;
};

/// Projective point [λ : μ : u] of the weighted curve u² = f(λ, μ).
struct WeightedPoint {
    Rational l, m, u;
};

struct AmplitudeEntry {
    std::string id;
    i64 e = 0;                  // claimed exponent of the squared amplitude ζ_n^e
    std::string quartic_text;   // empty when the angles are rationally parametrised
    LPoly quartic;              // in the formulas' own variables
    std::vector<AngleFormula> angles;
    bool swapped = false;       // formulas written with λ and μ exchanged relative to the basis
    std::optional<WeightedPoint> base_point;
    std::vector<CurveClaim> curves;
    std::vector<WeightedPoint> complete_point_list;  // claimed to be all rational points
    std::string source;
    std::optional<i64> printed_label;  // exponent printed for these angles, when it differs from e

    bool parametrised() const { return quartic_text.empty(); }
};

struct FamilyDescriptor {
    std::string id;  // "n.k"
    i64 n = 1, k = 0;
    Cyclotomic tau10, tau01;
    std::array<Rational, 4> involution;  // [λ : μ] ↦ [i0 λ + i1 μ : i2 λ + i3 μ]
    std::vector<std::pair<Rational, Rational>> exceptional;
    std::vector<AmplitudeEntry> entries;

    const AmplitudeEntry& entry(i64 e) const {
        // prefer the summary-table form, then the statement form
        const AmplitudeEntry* best = nullptr;
        for (auto& x : entries)
            if (x.e == e && (!best || x.source == "table")) best = &x;
        if (!best) throw UnknownId(id + "/e" + std::to_string(e));
        return *best;
    }
    const AmplitudeEntry& entry(const std::string& entry_id) const {
        for (auto& x : entries)
            if (x.id == entry_id) return x;
        throw UnknownId(entry_id);
    }
    bool is_exceptional(const Rational& l, const Rational& m) const {
        for (auto& [a, b] : exceptional)
            if (a * m == b * l) return true;
        return false;
    }
};

inline Cyclotomic family_tau(const FamilyDescriptor& d, const Rational& l, const Rational& m) {
    if (sgn(l) == 0 && sgn(m) == 0) throw ZeroParameters();
    return Cyclotomic(l) * d.tau10 + Cyclotomic(m) * d.tau01;
}

inline Space family_space(const FamilyDescriptor& d, const Rational& l, const Rational& m) {
    return {d.n, family_tau(d, l, m), "family " + d.id};
}

/// Value of the entry's quartic at basis coordinates (λ, μ).
inline Rational quartic_value(const AmplitudeEntry& e, const Rational& l, const Rational& m) {
    const Rational &x = e.swapped ? m : l, &y = e.swapped ? l : m;
    return e.quartic.eval<Rational>({x, y, Rational(0)});
}

struct FamilyAngles {
    Rational u;
    std::vector<RationalAngle> angles;   // both signs of u for every formula pair
    std::vector<bool> matches;           // amplitude equals ζ_n^e exactly
    bool all_match() const { return std::all_of(matches.begin(), matches.end(), [](bool b) { return b; }); }
};

/// The angles of squared amplitude ζ_n^e at [λ : μ], present iff the quartic takes a square value.
/// Each angle is returned as (τ+b, τ+a), the orientation in which the formulas give ζ_n^e.
inline std::optional<FamilyAngles> family_angles(const FamilyDescriptor& d, const AmplitudeEntry& e,
                                                 const Rational& l, const Rational& m) {
    if (sgn(l) == 0 && sgn(m) == 0) throw ZeroParameters();
    if (d.is_exceptional(l, m))
        throw ExceptionalParameter("[" + show(l) + ":" + show(m) + "] is exceptional for " + d.id);
    FamilyAngles out;
    if (!e.parametrised()) {
        auto u = rational_is_square(quartic_value(e, l, m));
        if (!u) return std::nullopt;
        out.u = *u;
    }
    const Cyclotomic tau = family_tau(d, l, m);
    const Cyclotomic target = zeta(d.n, e.e);
    const Rational &x = e.swapped ? m : l, &y = e.swapped ? l : m;
    for (auto& f : e.angles)
        for (int s : {1, -1}) {
            if (e.parametrised() && s < 0) break;
            Rational u = out.u * s;
            auto a = f.a.at(x, y, u), b = f.b.at(x, y, u);
            if (!a || !b)
                throw ExceptionalParameter("a denominator vanishes at [" + show(l) + ":" + show(m) + "] for " +
                                           e.id);
            Cyclotomic va = tau + Cyclotomic(*a), vb = tau + Cyclotomic(*b);
            if (va.is_zero() || vb.is_zero() || *a == *b)
                throw ExceptionalParameter("degenerate angle at [" + show(l) + ":" + show(m) + "] for " + e.id);
            Cyclotomic w = vb / va;
            Cyclotomic amp = w.conj() / w;
            out.angles.push_back({vb, va, amp});
            out.matches.push_back(amp == target);
        }
    return out;
}

inline std::optional<FamilyAngles> family_angles(const FamilyDescriptor& d, i64 e, const Rational& l,
                                                 const Rational& m) {
    return family_angles(d, d.entry(e), l, m);
}

/// p(λ, μ, u) with u in a quadratic extension.
inline QuadExt eval_quad(const LPoly& p, const Rational& l, const Rational& m, const QuadExt& u) {
    QuadExt s = u.lift(Cyclotomic(0));
    for (auto& [ex, c] : p.terms()) {
        Rational k = c;
        for (unsigned i = 0; i < ex[0]; ++i) k *= l;
        for (unsigned i = 0; i < ex[1]; ++i) k *= m;
        QuadExt t = u.lift(Cyclotomic(k));
        for (unsigned i = 0; i < ex[2]; ++i) t = t * u;
        s = s + t;
    }
    return s;
}

/// The angle formulas at [λ : μ] with u = √f(λ, μ) adjoined, for f(λ, μ) positive and not a square:
/// one flag per formula and sign, true when the squared amplitude is exactly ζ_n^e. Empty when f is
/// not positive, is a square, or a denominator vanishes.
inline std::optional<std::vector<bool>> generic_angle_check(const FamilyDescriptor& d, const AmplitudeEntry& e,
                                                            const Rational& l, const Rational& m) {
    if (e.parametrised()) throw std::invalid_argument("entry has no quartic");
    Rational f = quartic_value(e, l, m);
    if (sgn(f) <= 0 || rational_is_square(f)) return std::nullopt;
    const QuadExt u(Cyclotomic(0), Cyclotomic(1), Cyclotomic(f));
    const Cyclotomic tau = family_tau(d, l, m), target = zeta(d.n, e.e);
    const Rational &x = e.swapped ? m : l, &y = e.swapped ? l : m;
    std::vector<bool> out;
    for (auto& fm : e.angles)
        for (int s : {1, -1}) {
            QuadExt us = u * Cyclotomic(Rational(s));
            QuadExt an = eval_quad(fm.a.num, x, y, us), ad = eval_quad(fm.a.den, x, y, us);
            QuadExt bn = eval_quad(fm.b.num, x, y, us), bd = eval_quad(fm.b.den, x, y, us);
            if (ad.is_zero() || bd.is_zero()) return std::nullopt;
            QuadExt va = an / ad + tau, vb = bn / bd + tau;
            if (va.is_zero() || vb.is_zero() || (va - vb).is_zero()) return std::nullopt;
            auto amp = squared_amplitude(vb, va);
            out.push_back(amp && amp->q().is_zero() && amp->p() == target);
        }
    return out;
}

struct FamilyPoint {
    Rational l, m, u;       // basis coordinates, u ≥ 0
    bool exceptional = false;
    bool verified = false;  // family_angles reproduced ζ_n^e for every returned angle
};

/// All [λ : μ] with coprime integers |λ|, |μ| ≤ H (one sign per point) at which the quartic is a
/// square, each re-checked through family_angles when it is not exceptional.
inline std::vector<FamilyPoint> search_family_points(const FamilyDescriptor& d, const AmplitudeEntry& e, long H) {
    if (H < 1) throw std::invalid_argument("height bound must be positive");
    if (e.parametrised()) throw std::invalid_argument("entry has no quartic");
    std::vector<FamilyPoint> out;
    for (long a = 0; a <= H; ++a)
        for (long b = -H; b <= H; ++b) {
            if (a == 0 && b != 1) continue;
            if (std::gcd(a, b) != 1) continue;
            Rational l(a), m(b);
            auto u = rational_is_square(quartic_value(e, l, m));
            if (!u) continue;
            FamilyPoint p{l, m, *u, d.is_exceptional(l, m), false};
            if (!p.exceptional) {
                try {
                    auto fa = family_angles(d, e, l, m);
                    p.verified = fa && fa->all_match();
                } catch (const ExceptionalParameter&) {
                    p.exceptional = true;
                }
            }
            out.push_back(p);
        }
    return out;
}

/// Coefficients (a, b, c, d, e) of a binary quartic a λ⁴ + b λ³μ + c λ²μ² + d λμ³ + e μ⁴.
inline std::array<Rational, 5> quartic_coefficients(const LPoly& f) {
    std::array<Rational, 5> c;
    for (auto& [ex, v] : f.terms()) {
        if (ex[2] != 0 || ex[0] + ex[1] != 4) throw std::invalid_argument("not a binary quartic form");
        c[4 - ex[0]] = v;
    }
    return c;
}

/// f(ι(λ, μ)) = s · f(λ, μ) as polynomials; returns s when it exists.
inline std::optional<Rational> involution_scalar(const LPoly& f, const std::array<Rational, 4>& i) {
    LPoly L = LPoly::var(0), M = LPoly::var(1);
    LPoly il = L * LPoly(i[0]) + M * LPoly(i[1]), im = L * LPoly(i[2]) + M * LPoly(i[3]);
    LPoly g = f.substitute({il, im, LPoly::var(2)});
    auto c = quartic_coefficients(f), h = quartic_coefficients(g);
    std::optional<Rational> s;
    for (int k = 0; k < 5; ++k) {
        if (sgn(c[k]) == 0) {
            if (sgn(h[k]) != 0) return std::nullopt;
            continue;
        }
        Rational r = h[k] / c[k];
        if (s && *s != r) return std::nullopt;
        s = r;
    }
    return s;
}

/// No primitive solution of u² = f(λ, μ) modulo M: for every (λ, μ) not both divisible by a
/// prime factor of M, f(λ, μ) is not a square residue. Coefficients must be integers.
inline bool no_primitive_solutions_mod(const LPoly& f, i64 M) {
    std::vector<i64> primes;
    for (auto [p, k] : factorize(M)) primes.push_back(p);
    std::vector<bool> square(static_cast<std::size_t>(M), false);
    for (i64 u = 0; u < M; ++u) square[static_cast<std::size_t>(mod(u * u, M))] = true;
    for (i64 a = 0; a < M; ++a)
        for (i64 b = 0; b < M; ++b) {
            bool primitive = true;
            for (i64 p : primes)
                if (a % p == 0 && b % p == 0) primitive = false;
            if (!primitive) continue;
            Rational v = f.eval<Rational>({Rational(a), Rational(b), Rational(0)});
            if (v.get_den() != 1) throw std::invalid_argument("quartic must have integer coefficients");
            Integer r = v.get_num() % M;
            if (r < 0) r += M;
            if (square[r.get_ui()]) return false;
        }
    return true;
}

/// g(u)·g(−u) for g = formula, reduced on u² = f; compared with the product p·q of two formulas.
inline bool product_identity(const RatFunc& g_plus, const RatFunc& h, const LPoly& f, const RatFunc& p,
                             const RatFunc& q, bool pair_with_minus = true) {
    auto neg = [](const RatFunc& r) {
        auto flip = [](const LPoly& x) {
            LPoly out;
            for (auto& [e, c] : x.terms()) out += LPoly::monomial(e, e[2] % 2 ? Rational(-c) : c);
            return out;
        };
        return RatFunc(flip(r.num), flip(r.den));
    };
    RatFunc lhs = g_plus * (pair_with_minus ? neg(h) : h);
    return equal_on_curve(lhs, p * q, f);
}

// ---------------------------------------------------------------- rectangular and CM constructions

struct RectangularCheck {
    bool purely_imaginary_root = false;
    Cyclotomic t_squared;     // ((y+1)/(y−1))², real and ≤ 0
    Cyclotomic discriminant;  // of the real quadratic for r with τ = r·(y+1)/(y−1)
    std::vector<QuadExt> roots;
    std::vector<bool> amplitude_ok;  // squared amplitude of (τ+a, τ+1) equals y
};

/// Whether τ² + (a−1)((y+1)/(y−1))τ − a = 0 has a purely imaginary root; each such root gives a
/// rectangular space with a rational angle of squared amplitude y, which is re-checked.
inline RectangularCheck rectangular_tau(const Rational& a, const Cyclotomic& y) {
    if (sgn(a) == 0 || a == 1 || a == -1) throw std::invalid_argument("a must not be 0 or ±1");
    if (!as_root_of_unity(y) || y == Cyclotomic(1)) throw std::invalid_argument("y must be a root of unity ≠ 1");
    RectangularCheck r;
    const Cyclotomic one(1), A(a);
    std::vector<QuadExt> roots;
    if (y == Cyclotomic(-1)) {
        // τ² = a
        r.t_squared = Cyclotomic(0);
        r.discriminant = A;
        if (sgn(a) < 0) {
            roots.push_back(QuadExt(Cyclotomic(0), one, A));
            roots.push_back(QuadExt(Cyclotomic(0), Cyclotomic(-1), A));
        }
    } else {
        Cyclotomic t = (y + one) / (y - one);
        Cyclotomic t2 = t * t;
        r.t_squared = t2;
        // τ = r t: t² r² + (a−1) t² r − a = 0
        Cyclotomic am1(Rational(a - 1));
        Cyclotomic disc = am1 * am1 * t2 * t2 + Cyclotomic(Rational(4 * a)) * t2;
        r.discriminant = disc;
        int s = sign_real(disc);
        if (s >= 0) {
            Cyclotomic inv2t2 = (Cyclotomic(2) * t2).inv();
            Cyclotomic p = -(am1 * t2) * inv2t2 * t, q = inv2t2 * t;
            if (s == 0) {
                roots.push_back(QuadExt(p, Cyclotomic(0), one));
            } else {
                roots.push_back(QuadExt(p, q, disc));
                roots.push_back(QuadExt(p, -q, disc));
            }
        }
    }
    for (auto& tau : roots) {
        if (tau.is_zero()) continue;
        r.roots.push_back(tau);
        auto amp = squared_amplitude(tau + A, tau + one);
        r.amplitude_ok.push_back(amp && amp->q().is_zero() && amp->p() == y);
    }
    r.purely_imaginary_root = !r.roots.empty();
    return r;
}

/// τ = (y+1)/(y−1): purely imaginary, with the rational quadruple (1, τ, τ+1, τ−1).
inline Space superrectangular_space(const Cyclotomic& y) {
    if (y == Cyclotomic(1)) throw YIsOne();
    if (!as_root_of_unity(y)) throw std::invalid_argument("y must be a root of unity");
    Cyclotomic tau = (y + Cyclotomic(1)) / (y - Cyclotomic(1));
    if (tau.is_zero()) throw DegenerateInput("y = −1 gives τ = 0");
    auto r = as_root_of_unity(y);
    return {lcm(2, r->order), tau, "superrectangular"};
}

/// Two right angles (1, τ) and (τ+b0, τ+b1) force τ² = b0·b1 < 0, a CM space Q(√(b0 b1)).
inline Rational two_right_angles_cm_check(const Rational& b0, const Rational& b1) {
    Rational t2 = b0 * b1;
    if (sgn(t2) >= 0) throw NonNegativeProduct();
    // confirm both angles are right angles for τ = √(b0 b1)
    QuadExt tau(Cyclotomic(0), Cyclotomic(1), Cyclotomic(t2));
    auto one = tau.lift(Cyclotomic(1));
    auto r1 = squared_amplitude(one, tau), r2 = squared_amplitude(tau + Cyclotomic(b0), tau + Cyclotomic(b1));
    if (!r1 || !r2 || !(r1->p() == Cyclotomic(-1)) || !(r2->p() == Cyclotomic(-1)))
        throw std::logic_error("right-angle identity failed");
    return t2;
}

}  // namespace rang
