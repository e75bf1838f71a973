#pragma once
// Sparse multivariate polynomials, the master equations and their symmetries.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rang/exactnum.hpp"

namespace rang {

/// Sparse polynomial in NV variables with coefficients in C, ordered graded-lex.
/// Variable NV-1 is the most significant in the lexicographic tie-break.
template <class C, int NV>
class BasicPoly {
public:
    using Exp = std::array<std::uint16_t, NV>;

    struct Grlex {
        bool operator()(const Exp& a, const Exp& b) const {
            int da = 0, db = 0;
            for (int i = 0; i < NV; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da < db;
            for (int i = NV - 1; i >= 0; --i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        }
    };
    using Terms = std::map<Exp, C, Grlex>;

    BasicPoly() = default;
    BasicPoly(const C& c) {
        if (!is_zero_coeff(c)) t_[Exp{}] = c;
    }
    BasicPoly(long c) : BasicPoly(C(c)) {}

    static BasicPoly var(int i, unsigned power = 1) {
        Exp e{};
        e[i] = static_cast<std::uint16_t>(power);
        BasicPoly p;
        p.t_[e] = C(1);
        return p;
    }
    static BasicPoly monomial(const Exp& e, const C& c) {
        BasicPoly p;
        if (!is_zero_coeff(c)) p.t_[e] = c;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    C coeff(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C(0) : it->second;
    }

    int degree_in(int v) const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max<int>(d, e[v]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) {
            int s = 0;
            for (int i = 0; i < NV; ++i) s += e[i];
            d = std::max(d, s);
        }
        return d;
    }

    BasicPoly operator-() const {
        BasicPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    BasicPoly& operator+=(const BasicPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                Exp e;
                for (int i = 0; i < NV; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }
    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j)
            if (i->first != j->first || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

    BasicPoly pow(unsigned k) const {
        BasicPoly r(C(1)), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    /// Leading term under graded-lex.
    std::pair<Exp, C> leading() const {
        if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *t_.rbegin();
    }

    template <class D, class F>
    BasicPoly<D, NV> map_coeffs(F&& f) const {
        BasicPoly<D, NV> r;
        for (auto& [e, c] : t_) r += BasicPoly<D, NV>::monomial(e, f(c));
        return r;
    }

    /// Evaluate with values of a type T that can absorb coefficients of type C.
    template <class T>
    T eval(const std::array<T, NV>& v) const {
        std::array<std::vector<T>, NV> powers;
        for (int i = 0; i < NV; ++i) {
            int d = degree_in(i);
            powers[i].push_back(T(1));
            for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * v[i]);
        }
        T s(0);
        for (auto& [e, c] : t_) {
            T m = T(c);
            for (int i = 0; i < NV; ++i)
                if (e[i]) m = m * powers[i][e[i]];
            s = s + m;
        }
        return s;
    }

    /// Substitute polynomials for the variables.
    BasicPoly substitute(const std::array<BasicPoly, NV>& img) const {
        std::array<std::vector<BasicPoly>, NV> powers;
        for (int i = 0; i < NV; ++i) {
            int d = degree_in(i);
            powers[i].push_back(BasicPoly(C(1)));
            for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * img[i]);
        }
        BasicPoly s;
        for (auto& [e, c] : t_) {
            BasicPoly m(c);
            for (int i = 0; i < NV; ++i)
                if (e[i]) m *= powers[i][e[i]];
            s += m;
        }
        return s;
    }

    /// Replace x_v by 1/x_v for the variables in the mask and clear denominators
    /// by multiplying with x_v^{deg_v}.
    BasicPoly invert_vars(const std::array<bool, NV>& mask) const {
        std::array<int, NV> deg{};
        for (int i = 0; i < NV; ++i) deg[i] = mask[i] ? degree_in(i) : 0;
        BasicPoly r;
        for (auto& [e, c] : t_) {
            Exp f = e;
            for (int i = 0; i < NV; ++i)
                if (mask[i]) f[i] = static_cast<std::uint16_t>(deg[i] - e[i]);
            r.add_term(f, c);
        }
        return r;
    }

    /// Divide out the largest monomial dividing every term; returns the removed exponent.
    Exp strip_monomial_content() {
        if (t_.empty()) return Exp{};
        Exp g = t_.begin()->first;
        for (auto& [e, c] : t_)
            for (int i = 0; i < NV; ++i) g[i] = std::min(g[i], e[i]);
        Terms nt;
        for (auto& [e, c] : t_) {
            Exp f = e;
            for (int i = 0; i < NV; ++i) f[i] = static_cast<std::uint16_t>(f[i] - g[i]);
            nt.emplace(f, c);
        }
        t_.swap(nt);
        return g;
    }

private:
    Terms t_;

    static bool is_zero_coeff(const C& c) {
        if constexpr (std::is_same_v<C, Rational>)
            return sgn(c) == 0;
        else
            return c.is_zero();
    }
    void add_term(const Exp& e, const C& c) {
        if (is_zero_coeff(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (is_zero_coeff(it->second)) t_.erase(it);
    }
};

enum Var : int { VA = 0, VB, VC, VD, VX, VY, VZ };

using MultiPoly = BasicPoly<Rational, 7>;
using CycloPoly = BasicPoly<Cyclotomic, 7>;

inline const char* var_name(int i) {
    static const char* names[] = {"a", "b", "c", "d", "x", "y", "z"};
    return names[i];
}

inline MultiPoly pvar(Var v) { return MultiPoly::var(v); }

inline MultiPoly xyz_monomial(unsigned p, unsigned q, unsigned r) {
    MultiPoly::Exp e{};
    e[VX] = static_cast<std::uint16_t>(p);
    e[VY] = static_cast<std::uint16_t>(q);
    e[VZ] = static_cast<std::uint16_t>(r);
    return MultiPoly::monomial(e, Rational(1));
}

/// Exact multivariate division: returns h with g = h·f when it exists.
template <class C, int NV>
std::optional<BasicPoly<C, NV>> divide_exact(BasicPoly<C, NV> g, const BasicPoly<C, NV>& f) {
    using P = BasicPoly<C, NV>;
    if (f.is_zero()) throw DivisionByZero();
    P h;
    auto [fe, fc] = f.leading();
    while (!g.is_zero()) {
        auto [ge, gc] = g.leading();
        typename P::Exp q;
        for (int i = 0; i < NV; ++i) {
            if (ge[i] < fe[i]) return std::nullopt;
            q[i] = static_cast<std::uint16_t>(ge[i] - fe[i]);
        }
        P t = P::monomial(q, gc / fc);
        h += t;
        g -= t * f;
    }
    return h;
}

/// True iff g is a polynomial multiple of f.
inline bool identity_multiple_check(const MultiPoly& f, const MultiPoly& g) { return divide_exact(g, f).has_value(); }

/// One term per line, "coeff a^i b^j c^k d^l x^p y^q z^r", after scaling to coprime integers.
inline std::string to_text(const MultiPoly& p) {
    Integer den = 1, num = 0;
    for (auto& [e, c] : p.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    std::ostringstream os;
    // iterate from the leading term down for a stable, readable layout
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational s = it->second * Rational(den) / Rational(num);
        os << s.get_num().get_str();
        for (int i = 0; i < 7; ++i) os << ' ' << var_name(i) << '^' << it->first[i];
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- master equations

/// The 27-term polynomial P(a,b,c,d,x,y,z), expanded from its 14 coefficient rows.
inline MultiPoly build_main_P() {
    const MultiPoly a = pvar(VA), b = pvar(VB), c = pvar(VC), d = pvar(VD);
    auto m = xyz_monomial;
    MultiPoly P;
    auto row = [&](const MultiPoly& coef, const MultiPoly& m1, const MultiPoly& m2) { P += coef * (m1 + m2); };
    const MultiPoly inner1 = a * b * c + a * b * d - 2 * a * c * d - 2 * b * c * d + c * c * d + c * d * d;
    const MultiPoly inner2 = a * a * b + a * b * b - 2 * a * b * c - 2 * a * b * d + a * c * d + b * c * d;
    const MultiPoly abcd = a * b + c * d;
    row(-b * (a - c) * (b - d) * d, m(2, 2, 2), m(0, 0, 0));
    row(b * inner1, m(2, 2, 1), m(0, 0, 1));
    row(d * inner2, m(2, 1, 2), m(0, 1, 0));
    row((a - c) * (b - d) * abcd, m(1, 2, 2), m(1, 0, 0));
    row(-b * (b - c) * c * (a - d), m(2, 2, 0), m(0, 0, 2));
    row(-a * a * b * c - a * b * b * c - a * a * b * d - a * b * b * d + 8 * a * b * c * d - a * c * c * d - b * c * c * d -
            a * c * d * d - b * c * d * d,
        m(2, 1, 1), m(0, 1, 1));
    row(-a * (b - c) * (a - d) * d, m(2, 0, 2), m(0, 2, 0));
    row(-2 * a * a * b * b + a * a * b * c + a * b * b * c - 2 * a * b * c * c + a * a * b * d + a * b * b * d +
            a * c * c * d + b * c * c * d - 2 * a * b * d * d + a * c * d * d + b * c * d * d - 2 * c * c * d * d,
        m(1, 2, 1), m(1, 0, 1));
    row(-2 * a * a * b * b + a * a * b * c + a * b * b * c + a * a * b * d + a * b * b * d - 2 * a * a * c * d -
            2 * b * b * c * d + a * c * c * d + b * c * c * d + a * c * d * d + b * c * d * d - 2 * c * c * d * d,
        m(1, 1, 2), m(1, 1, 0));
    row(-a * (a - c) * c * (b - d), m(0, 2, 2), m(2, 0, 0));
    row(c * inner2, m(2, 1, 0), m(0, 1, 2));
    row(a * inner1, m(2, 0, 1), m(0, 2, 1));
    row((b - c) * (a - d) * abcd, m(1, 2, 0), m(1, 0, 2));
    P += 2 *
         (2 * a * a * b * b - a * a * b * c - a * b * b * c + 2 * a * b * c * c - a * a * b * d - a * b * b * d +
          2 * a * a * c * d - 4 * a * b * c * d + 2 * b * b * c * d - a * c * c * d - b * c * c * d + 2 * a * b * d * d -
          a * c * d * d - b * c * d * d + 2 * c * c * d * d) *
         m(1, 1, 1);
    return P;
}

/// The 14-term polynomial for a rational triple plus a rational angle, in (a,b,c,x,y,z).
inline MultiPoly build_P32() {
    const MultiPoly a = pvar(VA), b = pvar(VB), c = pvar(VC);
    auto m = xyz_monomial;
    const MultiPoly k = 2 * a * a - a * (b + c) + 2 * b * c;
    return k * m(1, 1, 0) - a * b * m(2, 1, 0) - a * c * m(0, 1, 0) - k * m(1, 1, 1) + a * b * m(0, 1, 1) +
           a * c * m(2, 1, 1) + b * (a - c) * m(2, 0, 0) + c * (a - b) * m(0, 2, 0) - a * (a - b) * m(1, 2, 0) -
           a * (a - c) * m(1, 0, 0) - b * (a - c) * m(0, 2, 1) - c * (a - b) * m(2, 0, 1) + a * (a - b) * m(1, 0, 1) +
           a * (a - c) * m(1, 2, 1);
}

/// The 8-term factor of P on the locus ab = cd.
inline MultiPoly build_f_abcd() {
    const MultiPoly a = pvar(VA), b = pvar(VB), c = pvar(VC), d = pvar(VD);
    auto m = xyz_monomial;
    return (d - b) * m(1, 1, 1) + (b - c) * m(1, 1, 0) + (a - d) * m(1, 0, 1) + (c - a) * m(0, 1, 1) +
           (c - a) * m(1, 0, 0) + (a - d) * m(0, 1, 0) + (b - c) * m(0, 0, 1) + (d - b);
}

/// The master polynomials are built once and shared.
inline const MultiPoly& main_P() {
    static const MultiPoly P = build_main_P();
    return P;
}
inline const MultiPoly& P32() {
    static const MultiPoly P = build_P32();
    return P;
}
inline const MultiPoly& f_abcd() {
    static const MultiPoly P = build_f_abcd();
    return P;
}

/// Looks up a master polynomial by its equation id: "main", "3plus2" or "abcd".
inline const MultiPoly& equation_poly(const std::string& id) {
    if (id == "main") return main_P();
    if (id == "3plus2") return P32();
    if (id == "abcd") return f_abcd();
    throw std::invalid_argument("unknown equation id: " + id);
}

/// P with b = 0 and (a,c,d,x,y,z) ↦ (a,b,c,x,x/y,z), with y-denominators cleared and
/// the monomial content removed. The removed monomial is returned through `content`.
inline MultiPoly P_specialised_to_3plus2(MultiPoly::Exp* content = nullptr) {
    MultiPoly out;
    for (auto& [e, c] : main_P().terms()) {
        if (e[VB] != 0) continue;
        // rename: old a→a, old c→b, old d→c; x^p (x/y)^q z^r · y^2 = x^{p+q} y^{2−q} z^r
        MultiPoly::Exp f{};
        f[VA] = e[VA];
        f[VB] = e[VC];
        f[VC] = e[VD];
        f[VX] = static_cast<std::uint16_t>(e[VX] + e[VY]);
        f[VY] = static_cast<std::uint16_t>(2 - e[VY]);
        f[VZ] = e[VZ];
        out += MultiPoly::monomial(f, c);
    }
    auto g = out.strip_monomial_content();
    if (content) *content = g;
    return out;
}

/// Evaluate a rational polynomial at cyclotomic values of its seven variables.
inline Cyclotomic eval(const MultiPoly& p, const std::array<Cyclotomic, 7>& v) {
    std::array<std::vector<Cyclotomic>, 7> powers;
    for (int i = 0; i < 7; ++i) {
        int d = p.degree_in(i);
        powers[i].push_back(Cyclotomic(1));
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * v[i]);
    }
    bool rational_coeffs = v[VA].is_rational() && v[VB].is_rational() && v[VC].is_rational() && v[VD].is_rational();
    Cyclotomic s(0);
    if (!rational_coeffs) {
        for (auto& [e, c] : p.terms()) {
            Cyclotomic m(c);
            for (int i = 0; i < 7; ++i)
                if (e[i]) m *= powers[i][e[i]];
            s += m;
        }
        return s;
    }
    // group terms by their x,y,z part so that each cyclotomic product is formed once
    std::map<std::array<std::uint16_t, 3>, Rational> grouped;
    for (auto& [e, c] : p.terms()) {
        Rational m = c;
        for (int i = 0; i < 4; ++i)
            if (e[i]) m *= powers[i][e[i]].to_rational();
        grouped[{e[VX], e[VY], e[VZ]}] += m;
    }
    for (auto& [k, c] : grouped) {
        if (sgn(c) == 0) continue;
        s += (powers[VX][k[0]] * powers[VY][k[1]] * powers[VZ][k[2]]).scaled(c);
    }
    return s;
}

// ---------------------------------------------------------------- solutions and symmetries

struct Solution {
    Rational a, b, c, d;
    Cyclotomic x, y, z;

    std::array<Cyclotomic, 7> as_array() const { return {a, b, c, d, x, y, z}; }
};

struct DegenerateImage : std::domain_error {
    DegenerateImage() : std::domain_error("symmetry image is degenerate") {}
};
struct AbEqualsCd : std::domain_error {
    AbEqualsCd() : std::domain_error("ab = cd: no single tau") {}
};
struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("zero denominator") {}
};
struct XEqualsY : std::domain_error {
    XEqualsY() : std::domain_error("x = y") {}
};

/// Generators of the symmetry group of P (five), of the ⟨3⟩+⟨2⟩ equation (three), or a Galois element.
struct SymmetryElement {
    enum class Kind { MainGenerator, P32Generator, Galois } kind = Kind::MainGenerator;
    int index = 1;  // generator number (1-based) or the Galois exponent
};

/// Scale four rationals by a positive factor so that they become coprime integers.
inline void normalize_positive(Rational& a, Rational& b, Rational& c, Rational& d) {
    Integer L = 1, G = 0;
    for (const Rational* r : {&a, &b, &c, &d}) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), r->get_den_mpz_t());
    for (const Rational* r : {&a, &b, &c, &d}) {
        Integer n = r->get_num() * (L / r->get_den());
        mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), n.get_mpz_t());
    }
    if (G == 0) return;
    Rational s(L, G);
    s.canonicalize();
    for (Rational* r : {&a, &b, &c, &d}) *r *= s;
}

inline Solution apply_symmetry(const SymmetryElement& s, const Solution& u) {
    using K = SymmetryElement::Kind;
    if (s.kind == K::Galois) return {u.a, u.b, u.c, u.d, u.x.galois(s.index), u.y.galois(s.index), u.z.galois(s.index)};
    if (s.kind == K::MainGenerator) {
        switch (s.index) {
            case 1:
                return {u.b, u.a, u.c, u.d, u.x, u.y.inv(), u.z};
            case 2:
                return {u.a, u.b, u.d, u.c, u.x, u.y, u.z.inv()};
            case 3:
                if (sgn(u.a) == 0 || sgn(u.b) == 0 || sgn(u.c) == 0 || sgn(u.d) == 0) throw DegenerateImage();
                return {1 / u.a, 1 / u.b, 1 / u.c, 1 / u.d, u.x.inv(), u.y, u.z};
            case 4:
                return {u.c, u.d, u.a, u.b, u.x, u.z, u.y};
            case 5: {
                // Rebase the space on the second angle by dividing through by τ + b. The variant
                // with c, d negated and y left uninverted does not preserve P.
                Rational a = u.b * (u.b - u.c) * (u.b - u.d), b = u.a * (u.b - u.c) * (u.b - u.d),
                         c = u.b * (u.a - u.c) * (u.b - u.d), d = u.b * (u.a - u.d) * (u.b - u.c);
                if (sgn(a) == 0 || sgn(b) == 0 || sgn(c) == 0 || sgn(d) == 0) throw DegenerateImage();
                normalize_positive(a, b, c, d);
                return {a, b, c, d, u.y.inv(), u.x, u.z};
            }
        }
    } else {
        // ⟨3⟩+⟨2⟩ solutions use (a,b,c,x,y,z); d is carried along untouched
        switch (s.index) {
            case 1:
                return {u.a, u.c, u.b, u.d, u.x, u.y, u.z.inv()};
            case 2:
                return {-u.a, -u.a + u.b, -u.a + u.c, u.d, u.y, u.x, u.z};
            case 3:
                if (sgn(u.a) == 0 || sgn(u.b) == 0 || sgn(u.c) == 0) throw DegenerateImage();
                return {1 / u.a, 1 / u.b, 1 / u.c, u.d, u.x.inv(), u.y * u.x.inv(), u.z};
        }
    }
    throw std::invalid_argument("unknown symmetry generator");
}

/// The image of P under a symmetry generator as a polynomial: substitute, clear denominators.
inline MultiPoly transformed_P(int generator) {
    const MultiPoly& P = main_P();
    std::array<MultiPoly, 7> id;
    for (int i = 0; i < 7; ++i) id[i] = MultiPoly::var(i);
    auto swap_img = [&](std::array<MultiPoly, 7> img) { return P.substitute(img); };
    switch (generator) {
        case 1: {
            auto img = id;
            std::swap(img[VA], img[VB]);
            return swap_img(img).invert_vars({false, false, false, false, false, true, false});
        }
        case 2: {
            auto img = id;
            std::swap(img[VC], img[VD]);
            return swap_img(img).invert_vars({false, false, false, false, false, false, true});
        }
        case 3:
            return P.invert_vars({true, true, true, true, true, false, false});
        case 4: {
            auto img = id;
            std::swap(img[VA], img[VC]);
            std::swap(img[VB], img[VD]);
            std::swap(img[VY], img[VZ]);
            return swap_img(img);
        }
        case 5: {
            const MultiPoly a = id[VA], b = id[VB], c = id[VC], d = id[VD];
            auto img = id;
            img[VA] = b * (b - c) * (b - d);
            img[VB] = a * (b - c) * (b - d);
            img[VC] = b * (a - c) * (b - d);
            img[VD] = b * (a - d) * (b - c);
            std::swap(img[VX], img[VY]);
            return swap_img(img).invert_vars({false, false, false, false, false, true, false});
        }
    }
    throw std::invalid_argument("unknown generator");
}

/// τ of the space carrying angles (1,τ), (τ+a,τ+b), (τ+c,τ+d) for a solution with ab ≠ cd.
inline Cyclotomic tau_from_solution(const Solution& s) {
    if (s.a * s.b == s.c * s.d) throw AbEqualsCd();
    const Cyclotomic one(1);
    const Cyclotomic &x = s.x, &y = s.y, &z = s.z;
    Cyclotomic num = Cyclotomic(Rational(s.c * s.d - s.a * s.b)) * x * (y - one) * (z - one);
    Cyclotomic den = (y - x) * (z - one) * Cyclotomic(s.a) + (x * y - one) * (z - one) * Cyclotomic(s.b) -
                     (z - x) * (y - one) * Cyclotomic(s.c) - (x * z - one) * (y - one) * Cyclotomic(s.d);
    if (den.is_zero()) throw ZeroDenominator();
    return num / den;
}

/// τ = a x (y − 1)/(x − y) for the ⟨3⟩+⟨2⟩ equation.
inline Cyclotomic tau_3plus2(const Rational& a, const Cyclotomic& x, const Cyclotomic& y) {
    if (x == y) throw XEqualsY();
    return Cyclotomic(a) * x * (y - Cyclotomic(1)) / (x - y);
}

// ---------------------------------------------------------------- small polynomial rings for families

/// Polynomials in (λ, μ, u) used by the family formulas.
using LPoly = BasicPoly<Rational, 3>;

/// A quotient of two LPoly values, compared by cross multiplication.
struct RatFunc {
    LPoly num, den{LPoly(1)};

    RatFunc() = default;
    RatFunc(const LPoly& n) : num(n), den(LPoly(1)) {}
    RatFunc(const LPoly& n, const LPoly& d) : num(n), den(d) {
        if (d.is_zero()) throw DivisionByZero();
    }
    RatFunc(long c) : num(LPoly(c)), den(LPoly(1)) {}

    friend RatFunc operator+(const RatFunc& p, const RatFunc& q) {
        if (p.den == q.den) return {p.num + q.num, p.den};
        return {p.num * q.den + q.num * p.den, p.den * q.den};
    }
    friend RatFunc operator-(const RatFunc& p, const RatFunc& q) {
        if (p.den == q.den) return {p.num - q.num, p.den};
        return {p.num * q.den - q.num * p.den, p.den * q.den};
    }
    RatFunc operator-() const { return {-num, den}; }
    friend RatFunc operator*(const RatFunc& p, const RatFunc& q) { return {p.num * q.num, p.den * q.den}; }
    friend RatFunc operator/(const RatFunc& p, const RatFunc& q) { return {p.num * q.den, p.den * q.num}; }

    /// Value at (λ, μ, u); empty when the denominator vanishes.
    std::optional<Rational> at(const Rational& l, const Rational& m, const Rational& u) const {
        Rational d = den.eval<Rational>({l, m, u});
        if (sgn(d) == 0) return std::nullopt;
        return Rational(num.eval<Rational>({l, m, u}) / d);
    }
};

/// Replace u² by f(λ, μ) throughout.
inline LPoly reduce_u_squared(const LPoly& p, const LPoly& f) {
    LPoly out;
    std::vector<LPoly> fp{LPoly(1)};
    for (auto& [e, c] : p.terms()) {
        unsigned k = e[2] / 2;
        while (fp.size() <= k) fp.push_back(fp.back() * f);
        LPoly::Exp r = e;
        r[2] = static_cast<std::uint16_t>(e[2] % 2);
        out += LPoly::monomial(r, c) * fp[k];
    }
    return out;
}

/// p == q as rational functions on the curve u² = f(λ, μ).
inline bool equal_on_curve(const RatFunc& p, const RatFunc& q, const LPoly& f) {
    return reduce_u_squared(p.num * q.den - q.num * p.den, f).is_zero();
}

}  // namespace rang
