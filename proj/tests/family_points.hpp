#pragma once
// Exact solutions of P used by several test suites.

#include <random>
#include <vector>

#include "rang/polyring.hpp"

namespace testpts {

using namespace rang;

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

// conj(w)/w for w = v1/v2
inline Cyclotomic sq_amp(const Cyclotomic& v1, const Cyclotomic& v2) {
    Cyclotomic w = v1 / v2;
    return w.conj() / w;
}

inline Solution abcd4() { return {q(3), q(1, 2), q(3, 2), q(1), zeta(10, 1), zeta(10, 2), zeta(10, 3)}; }

// Three angles (1,τ), (τ+a,τ+b), (τ+c,τ+d) of a degree-8 family member.
inline Solution octic_family_solution(const Rational& l, const Rational& m) {
    Cyclotomic tau = Cyclotomic(l) * (zeta(8, 2) - zeta(8, 3)) + Cyclotomic(m) * (Cyclotomic(1) + zeta(8, 1));
    Rational a = (l * l - 2 * l * m - m * m) / (l + m);
    Rational b = -2 * (l * l * l + 2 * l * l * m - l * m * m) / (l * l - 2 * l * m - m * m);
    Rational c = (-l * l - 2 * l * m + m * m) / (2 * l);
    Rational d = -2 * (l + m);
    auto t = [&](const Rational& s) { return tau + Cyclotomic(s); };
    return {a, b, c, d, sq_amp(Cyclotomic(1), tau), sq_amp(t(a), t(b)), sq_amp(t(c), t(d))};
}

// Same for the degree-12 family with angles of squared amplitude ζ12 and ζ12^5.
inline Solution dodecic_family_solution(const Rational& l, const Rational& m) {
    Cyclotomic tau = Cyclotomic(l) * (zeta(12, 1) + zeta(12, 2) - zeta(12, 3)) + Cyclotomic(m) * (Cyclotomic(1) + zeta(12, 1));
    Rational a = -m * (2 * l + m) / (l + m);
    Rational b = l * (2 * l * l + 2 * l * m - m * m) / (m * (2 * l + m));
    Rational c = -l - 2 * m;
    Rational d = (-2 * l * l - 2 * l * m + m * m) / (l - m);
    auto t = [&](const Rational& s) { return tau + Cyclotomic(s); };
    return {a, b, c, d, sq_amp(Cyclotomic(1), tau), sq_amp(t(a), t(b)), sq_amp(t(c), t(d))};
}

inline std::vector<Solution> generated_solutions(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<Solution> out;
    while (static_cast<int>(out.size()) < count) {
        long l = dist(rng), m = dist(rng);
        if (l == 0 || m == 0 || l == m || l == -m || 2 * l == -m || l == -2 * m) continue;
        Rational L = q(l), M = q(m);
        if (sgn(L * L - 2 * L * M - M * M) == 0) continue;
        Solution s = (out.size() % 2) ? dodecic_family_solution(L, M) : octic_family_solution(L, M);
        std::vector<Rational> v{s.a, s.b, s.c, s.d};
        bool ok = s.a * s.b != s.c * s.d;
        for (int i = 0; i < 4 && ok; ++i) {
            if (sgn(v[i]) == 0) ok = false;
            for (int j = i + 1; j < 4; ++j)
                if (v[i] == v[j]) ok = false;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace testpts
