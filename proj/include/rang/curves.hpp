#pragma once
// Elliptic curves over Q in general Weierstrass form: group law, torsion by Nagell–Lutz,
// infinite-order certificates, and isomorphism tests via (c4, c6).

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rang/exactnum.hpp"

namespace rang {

struct PointNotOnCurve : std::domain_error {
    PointNotOnCurve() : std::domain_error("point is not on the curve") {}
};

struct CurvePoint {
    bool infinity = true;
    Rational x{0}, y{0};

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(const Rational& x, const Rational& y) { return {false, x, y}; }
    friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
    std::string str() const {
        if (infinity) return "O";
        return "(" + show(x) + "," + show(y) + ")";
    }
};

/// y² + a1 xy + a3 y = x³ + a2 x² + a4 x + a6
struct WeierstrassCurve {
    Rational a1{0}, a2{0}, a3{0}, a4{0}, a6{0};

    Rational b2() const { return a1 * a1 + 4 * a2; }
    Rational b4() const { return 2 * a4 + a1 * a3; }
    Rational b6() const { return a3 * a3 + 4 * a6; }
    Rational b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
    Rational c4() const { return b2() * b2() - 24 * b4(); }
    Rational c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
    Rational discriminant() const {
        return -b2() * b2() * b8() - 8 * b4() * b4() * b4() - 27 * b6() * b6() + 9 * b2() * b4() * b6();
    }

    /// y² = x³ + A x + B
    static WeierstrassCurve short_form(const Rational& A, const Rational& B) { return {0, 0, 0, A, B}; }
    /// y² = x³ + a x² + b x + c
    static WeierstrassCurve cubic(const Rational& a, const Rational& b, const Rational& c) { return {0, a, 0, b, c}; }

    bool contains(const CurvePoint& P) const {
        if (P.infinity) return true;
        const Rational &x = P.x, &y = P.y;
        return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
    }
    void require(const CurvePoint& P) const {
        if (!contains(P)) throw PointNotOnCurve();
    }

    CurvePoint negate(const CurvePoint& P) const {
        if (P.infinity) return P;
        return CurvePoint::affine(P.x, -P.y - a1 * P.x - a3);
    }

    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const {
        require(P);
        require(Q);
        return add_unchecked(P, Q);
    }

    CurvePoint multiply(long k, const CurvePoint& P) const {
        require(P);
        CurvePoint base = k < 0 ? negate(P) : P, acc;
        for (unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k); n; n >>= 1) {
            if (n & 1) acc = add_unchecked(acc, base);
            base = add_unchecked(base, base);
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[" << show(a1) << "," << show(a2) << "," << show(a3) << "," << show(a4) << ","
           << show(a6) << "]";
        return os.str();
    }

private:
    CurvePoint add_unchecked(const CurvePoint& P, const CurvePoint& Q) const {
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        Rational lambda, nu;
        if (P.x == Q.x) {
            if (P.y + Q.y + a1 * Q.x + a3 == 0) return CurvePoint::at_infinity();
            Rational den = 2 * P.y + a1 * P.x + a3;
            lambda = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / den;
            nu = (-P.x * P.x * P.x + a4 * P.x + 2 * a6 - a3 * P.y) / den;
        } else {
            lambda = (Q.y - P.y) / (Q.x - P.x);
            nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
        }
        Rational x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
        Rational y3 = -(lambda + a1) * x3 - nu - a3;
        return CurvePoint::affine(x3, y3);
    }
};

/// Order of P if it is at most 12, else 0. By Mazur no rational torsion point has larger order.
inline int small_order(const WeierstrassCurve& E, const CurvePoint& P) {
    E.require(P);
    CurvePoint acc = P;
    for (int k = 1; k <= 12; ++k) {
        if (acc.infinity) return k;
        acc = E.add(acc, P);
    }
    return 0;
}

struct OrderCertificate {
    bool infinite = false;
    int order = 0;  // when finite
};

/// kP ≠ O for 1 ≤ k ≤ 12 certifies infinite order.
inline OrderCertificate certify_infinite_order(const WeierstrassCurve& E, const CurvePoint& P) {
    int k = small_order(E, P);
    return k ? OrderCertificate{false, k} : OrderCertificate{true, 0};
}

namespace detail {
inline Integer isqrt_exact(const Integer& v, bool& ok) {
    if (v < 0) {
        ok = false;
        return 0;
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    ok = r * r == v;
    return r;
}
inline Integer icbrt_floor(const Integer& v) {
    Integer r;
    mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);  // truncates toward zero
    while (r * r * r > v) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= v) ++r;
    return r;
}
}  // namespace detail

struct TorsionGroup {
    int n1 = 1, n2 = 1;  // Z/n1 × Z/n2 with n1 | n2
    std::vector<CurvePoint> points;
    int order() const { return n1 * n2; }
    std::string structure() const {
        if (n1 == 1) return n2 == 1 ? "0" : "Z/" + std::to_string(n2);
        return "Z/" + std::to_string(n1) + " x Z/" + std::to_string(n2);
    }
};

/// The rational torsion subgroup. Works on the integral short model Y² = X³ + AX + B obtained
/// from X = 36x + 3b2, Y = 108(2y + a1 x + a3), scaled until A, B are integers; by Nagell–Lutz
/// torsion points there are integral with Y = 0 or Y² | 4A³ + 27B².
inline TorsionGroup torsion_subgroup(const WeierstrassCurve& E) {
    if (E.discriminant() == 0) throw std::domain_error("singular curve");
    Rational A = -27 * E.c4(), B = -54 * E.c6();
    Integer u = 1;  // (X, Y) = (u² X', u³ Y') rescaling to clear denominators
    {
        Integer d = 1;
        mpz_lcm(d.get_mpz_t(), A.get_den_mpz_t(), B.get_den_mpz_t());
        u = d;
        Rational u2 = Rational(u * u);
        A *= u2 * u2;
        B *= u2 * u2 * u2;
    }
    const Integer Ai = A.get_num(), Bi = B.get_num();
    const Integer D = 4 * Ai * Ai * Ai + 27 * Bi * Bi;
    const Integer Dabs = abs(D);
    // Y² ≤ |D| and Y² ≥ 0 confine X: once |X| ≥ 2√|A|, |AX| ≤ |X|³/4, so X ≤ (2(|D|+|B|))^{1/3}
    // above and |X| ≤ (2|B|)^{1/3} below.
    Integer sqrtA;
    mpz_sqrt(sqrtA.get_mpz_t(), Integer(abs(Ai)).get_mpz_t());
    const Integer base = 2 * sqrtA + 2;
    const Integer hi = std::max(base, Integer(detail::icbrt_floor(Integer(2 * (Dabs + abs(Bi)))) + 2));
    const Integer lo_mag = std::max(base, Integer(detail::icbrt_floor(Integer(2 * abs(Bi))) + 2));
    std::vector<CurvePoint> short_pts{CurvePoint::at_infinity()};
    const WeierstrassCurve S = WeierstrassCurve::short_form(Rational(Ai), Rational(Bi));
    for (Integer X = -lo_mag; X <= hi; ++X) {
        Integer v = X * X * X + Ai * X + Bi;
        if (v < 0) continue;
        bool ok;
        Integer Y = detail::isqrt_exact(v, ok);
        if (!ok) continue;
        if (Y != 0 && D % (Y * Y) != 0) continue;
        for (int s : {1, -1}) {
            CurvePoint P = CurvePoint::affine(Rational(X), Rational(Integer(s * Y)));
            if (small_order(S, P)) short_pts.push_back(P);
            if (Y == 0) break;
        }
    }
    // back to the original model
    TorsionGroup G;
    const Rational b2 = E.b2(), uu = Rational(u);
    for (auto& P : short_pts) {
        if (P.infinity) {
            G.points.push_back(P);
            continue;
        }
        Rational X = P.x / (uu * uu), Y = P.y / (uu * uu * uu);
        Rational x = (X - 3 * b2) / 36;
        Rational y = (Y / 108 - E.a1 * x - E.a3) / 2;
        CurvePoint Q = CurvePoint::affine(x, y);
        if (!E.contains(Q)) throw std::logic_error("torsion: coordinate change failed");
        G.points.push_back(Q);
    }
    const int N = static_cast<int>(G.points.size());
    int two_torsion = 0;
    for (auto& P : G.points)
        if (small_order(E, P) <= 2) ++two_torsion;
    if (two_torsion == 4) {
        G.n1 = 2;
        G.n2 = N / 2;
    } else {
        G.n1 = 1;
        G.n2 = N;
    }
    return G;
}

namespace detail {
/// r = s^k for some rational s?
inline bool is_rational_power(const Rational& r, unsigned k) {
    if (r == 0) return true;
    if (r < 0 && k % 2 == 0) return false;
    auto root = [&](const Integer& v) {
        Integer a = abs(v), t;
        bool exact = mpz_root(t.get_mpz_t(), a.get_mpz_t(), k) != 0;
        return exact;
    };
    return root(r.get_num()) && root(r.get_den());
}
}  // namespace detail

/// E1 ≅ E2 over Q: some u ∈ Q^× has c4' = u⁴ c4 and c6' = u⁶ c6.
inline bool isomorphic_over_Q(const WeierstrassCurve& E1, const WeierstrassCurve& E2) {
    const Rational c4 = E1.c4(), c6 = E1.c6(), d4 = E2.c4(), d6 = E2.c6();
    if ((c4 == 0) != (d4 == 0) || (c6 == 0) != (d6 == 0)) return false;
    if (c4 == 0) return detail::is_rational_power(d6 / c6, 6);
    if (c6 == 0) return detail::is_rational_power(d4 / c4, 4);
    // u² = (d6/c6)/(d4/c4) must be a square whose square is d4/c4
    Rational u2 = (d6 / c6) / (d4 / c4);
    if (u2 * u2 != d4 / c4) return false;
    return rational_is_square(u2).has_value();
}

/// Jacobian of u² = a λ⁴ + b λ³μ + c λ²μ² + d λμ³ + e μ⁴, as Y² = X³ − 27 I X − 27 J.
inline WeierstrassCurve quartic_jacobian(const std::array<Rational, 5>& q) {
    const Rational &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
    Rational I = 12 * a * e - 3 * b * d + c * c;
    Rational J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
    return WeierstrassCurve::short_form(-27 * I, -27 * J);
}

}  // namespace rang
