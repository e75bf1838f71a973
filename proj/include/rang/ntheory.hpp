#pragma once
// Small-integer number theory helpers shared by the exact arithmetic layer.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace rang {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

inline i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline int mobius(i64 n) {
    int s = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> d{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t cur = d.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < cur; ++i) d.push_back(d[i] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

/// Units modulo n in increasing order (for n = 1 this is {0}, i.e. the trivial group).
inline std::vector<i64> units_mod(i64 n) {
    std::vector<i64> u;
    if (n == 1) return {0};
    for (i64 i = 1; i < n; ++i)
        if (std::gcd(i, n) == 1) u.push_back(i);
    return u;
}

/// Inverse of a modulo n; throws when gcd(a, n) != 1.
inline i64 inv_mod(i64 a, i64 n) {
    i64 g = n, x = 0, x1 = 1, r = mod(a, n);
    while (r) {
        i64 q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::domain_error("inv_mod: not invertible");
    return mod(x, n);
}

/// Ramanujan sum c_n(j): the trace of ζ_n^j from Q(ζ_n) to Q.
inline i64 ramanujan_sum(i64 n, i64 j) {
    i64 g = std::gcd(mod(j, n), n);
    if (g == 0) g = n;
    i64 m = n / g;
    return mobius(m) * (euler_phi(n) / euler_phi(m));
}

/// The order actually used to store elements of Q(ζ_n): n/2 when n ≡ 2 mod 4.
inline i64 canonical_order(i64 n) { return (n % 4 == 2) ? n / 2 : n; }

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
inline std::vector<i64> cyclotomic_poly(i64 n) {
    // Φ_n = Π_{d|n} (x^d − 1)^{μ(n/d)}; multiply the numerator factors, then divide.
    std::vector<i64> num{1}, den{1};
    auto mul = [](std::vector<i64>& p, i64 d) {  // p *= (x^d − 1)
        std::vector<i64> r(p.size() + d, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            r[i + d] += p[i];
            r[i] -= p[i];
        }
        p.swap(r);
    };
    for (i64 d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 1) mul(num, d);
        if (mu == -1) mul(den, d);
    }
    // exact division num / den (den monic up to sign)
    std::vector<i64> q(num.size() - den.size() + 1, 0);
    i64 lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        i64 c = num[k + den.size() - 1] / lead;
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    return q;
}

}  // namespace rang
