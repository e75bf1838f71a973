#pragma once
// Galois-conjugate systems for a fixed q-part of (x, y, z), and their descent to Q by traces.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rang/polyring.hpp"

namespace rang {

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// x = ζ_q^{e1} x', y = ζ_q^{e2} y', z = ζ_q^{e3} z' for the equation `equation`.
struct DescentSpec {
    i64 q = 1;
    std::array<i64, 3> e{};
    std::string equation = "main";

    void validate() const {
        if (q < 1) throw InvalidSpec("q must be positive");
        for (i64 x : e)
            if (x < 0 || x >= q) throw InvalidSpec("exponents must lie in [0, q-1]");
        if (std::gcd(std::gcd(std::gcd(e[0], e[1]), e[2]), q) != 1) throw InvalidSpec("gcd(e1, e2, e3, q) must be 1");
        equation_poly(equation);  // throws on an unknown id
    }
    std::string describe() const {
        std::ostringstream os;
        os << "equation=" << equation << " q=" << q << " e=(" << e[0] << "," << e[1] << "," << e[2] << ")";
        return os.str();
    }
};

/// One polynomial per σ_i ∈ Gal(Q(ζ_q)/Q): P with x → σ_i(ξ1) x', y → σ_i(ξ2) y', z → σ_i(ξ3) z'.
inline std::vector<CycloPoly> conjugate_system(const DescentSpec& spec) {
    spec.validate();
    const MultiPoly& P = equation_poly(spec.equation);
    std::vector<CycloPoly> out;
    for (i64 i : units_mod(spec.q)) {
        CycloPoly s;
        for (auto& [ex, c] : P.terms()) {
            i64 k = i * (spec.e[0] * ex[VX] + spec.e[1] * ex[VY] + spec.e[2] * ex[VZ]);
            s += CycloPoly::monomial(ex, zeta(spec.q, k).scaled(c));
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// Scale to the representative with leading coefficient 1; used to deduplicate up to Q^×.
inline MultiPoly monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Rational l = p.leading().second;
    return p.map_coeffs<Rational>([&](const Rational& c) { return Rational(c / l); });
}

struct DescendedIdeal {
    DescentSpec spec;
    std::vector<MultiPoly> generators;  // rational, monic, pairwise non-proportional
};

/// Coefficient-wise traces tr(p · ζ_q^j), 0 ≤ j < φ(q), for every p of the system.
inline DescendedIdeal descend_to_Q(const std::vector<CycloPoly>& system, const DescentSpec& spec) {
    DescendedIdeal out{spec, {}};
    std::set<std::string> seen;
    const i64 deg = euler_phi(spec.q);
    for (auto& p : system)
        for (i64 j = 0; j < deg; ++j) {
            Cyclotomic beta = zeta(spec.q, j);
            MultiPoly t;
            for (auto& [ex, c] : p.terms()) t += MultiPoly::monomial(ex, trace_to_Q(c * beta, spec.q));
            if (t.is_zero()) continue;
            t = monic(t);
            if (seen.insert(to_text(t)).second) out.generators.push_back(std::move(t));
        }
    return out;
}

inline DescendedIdeal descend(const DescentSpec& spec) { return descend_to_Q(conjugate_system(spec), spec); }

/// Which nondegeneracy factors vanish at a point, by name.
struct PointCheck {
    bool on_variety = false;
    std::vector<std::string> vanishing_factors;
    bool nondegenerate() const { return vanishing_factors.empty(); }
};

/// Evaluate every generator at (a, b, c, d, x', y', z'). The flags cover the coefficient
/// factors of the equation (for "3plus2": abc(a−b)(b−c)(c−a); otherwise abcd, pairwise
/// differences, and ab − cd for "main") and the set S: x'−1 when e1 = 0 (same for y', z'),
/// and x'−y' when e1 = e2.
inline PointCheck check_point(const DescendedIdeal& ideal, const std::array<Cyclotomic, 7>& pt) {
    PointCheck r;
    r.on_variety = true;
    for (auto& g : ideal.generators)
        if (!eval(g, pt).is_zero()) {
            r.on_variety = false;
            break;
        }
    const char* names = "abcd";
    const int nc = ideal.spec.equation == "3plus2" ? 3 : 4;
    auto flag = [&](bool vanishes, const std::string& name) {
        if (vanishes) r.vanishing_factors.push_back(name);
    };
    for (int i = 0; i < nc; ++i) flag(pt[i].is_zero(), std::string(1, names[i]));
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j)
            flag(pt[i] == pt[j], std::string(1, names[i]) + "-" + names[j]);
    if (ideal.spec.equation == "main") flag(pt[VA] * pt[VB] == pt[VC] * pt[VD], "ab-cd");
    const char* primed[3] = {"x'", "y'", "z'"};
    for (int i = 0; i < 3; ++i)
        if (ideal.spec.e[i] == 0) flag(pt[VX + i] == Cyclotomic(1), std::string(primed[i]) + "-1");
    if (ideal.spec.e[0] == ideal.spec.e[1]) flag(pt[VX] == pt[VY], "x'-y'");
    return r;
}

/// u = ζ_q^e · u' with u' of order prime to q; requires gcd(q, n/q) = 1 for the order n of u
/// and q | n (any q works when the q-part of u is trivial, giving e = 0).
struct SplitRoot {
    i64 e;
    Cyclotomic rest;
};
inline SplitRoot split_root(const Cyclotomic& u, i64 q) {
    auto r = as_root_of_unity(u);
    if (!r) throw std::invalid_argument("split_root: not a root of unity");
    const i64 n = r->order;
    // q-part and prime-to-q part of n
    i64 nq = 1, rest = n;
    for (auto [p, k] : factorize(q))
        while (rest % p == 0) {
            rest /= p;
            nq *= p;
        }
    if (q % nq != 0) throw std::invalid_argument("split_root: q-part of the order does not divide q");
    // u = ζ_n^k; write k/n = s/nq + t/rest via CRT, then ζ_q^{s·q/nq} is the q-part
    i64 s = nq == 1 ? 0 : mod(r->exponent * inv_mod(rest, nq), nq);
    i64 e = s * (q / nq);
    Cyclotomic rest_part = u * zeta(q, -e);
    return {mod(e, q), rest_part};
}

/// Decompose the (x, y, z) of a point into q-parts and the prime-to-q remainder.
inline std::pair<DescentSpec, std::array<Cyclotomic, 7>> split_point(const std::array<Cyclotomic, 7>& pt, i64 q,
                                                                    const std::string& equation) {
    DescentSpec spec{q, {}, equation};
    std::array<Cyclotomic, 7> out = pt;
    for (int i = 0; i < 3; ++i) {
        auto s = split_root(pt[VX + i], q);
        spec.e[i] = s.e;
        out[VX + i] = s.rest;
    }
    return {spec, out};
}

/// One generator per line (terms joined by " ; "), after a header recording the spec.
inline std::string ideal_text(const DescendedIdeal& ideal) {
    std::ostringstream os;
    os << "# descended ideal " << ideal.spec.describe() << " generators=" << ideal.generators.size() << "\n";
    for (auto& g : ideal.generators) {
        std::string t = to_text(g);
        if (!t.empty() && t.back() == '\n') t.pop_back();
        for (auto& ch : t)
            if (ch == '\n') ch = ';';
        std::string line;
        for (char ch : t) line += ch == ';' ? std::string(" ; ") : std::string(1, ch);
        os << line << "\n";
    }
    return os.str();
}

inline void export_ideal(const DescendedIdeal& ideal, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << ideal_text(ideal);
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace rang
