#pragma once
// Triples (ζ_n^{e1}, ζ_n^{e2}, ζ_n^{e3}) of common order n up to signed permutations and Galois.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rang/ntheory.hpp"

namespace rang {

/// Exponents in [1, n]; n stands for the root of unity 1.
using Triple = std::array<i64, 3>;

inline i64 wrap_exponent(i64 e, i64 n) {
    i64 r = mod(e, n);
    return r == 0 ? n : r;
}

inline i64 root_order(i64 e, i64 n) { return n / std::gcd(mod(e, n), n); }

inline i64 common_order(const Triple& t, i64 n) {
    return lcm(lcm(root_order(t[0], n), root_order(t[1], n)), root_order(t[2], n));
}

/// All triples in [1, n]^3 with gcd(e1, e2, e3, n) = 1, streamed to f; returns the count.
inline std::uint64_t raw_triples(i64 n, const std::function<void(const Triple&)>& f = {}) {
    if (n < 1) throw std::invalid_argument("raw_triples: n >= 1");
    std::uint64_t count = 0;
    for (i64 a = 1; a <= n; ++a) {
        i64 ga = std::gcd(a, n);
        for (i64 b = 1; b <= n; ++b) {
            i64 gb = std::gcd(ga, b);
            for (i64 c = 1; c <= n; ++c)
                if (std::gcd(gb, c) == 1) {
                    ++count;
                    if (f) f({a, b, c});
                }
        }
    }
    return count;
}

/// e1 | n, gcd(e2, n) ≥ e1, gcd(e3, n) ≥ e1, 1 ≤ e2 ≤ e3 ≤ n/2.
inline bool reduction_predicate(const Triple& t, i64 n) {
    const i64 e1 = t[0], e2 = t[1], e3 = t[2];
    if (e1 < 1 || e1 > n || n % e1 != 0) return false;
    if (e2 < 1 || e2 > e3 || 2 * e3 > n) return false;
    return std::gcd(e2, n) >= e1 && std::gcd(e3, n) >= e1;
}

/// Each of x, y, z generates an extension of degree at most 2 over the field of the other two.
inline bool degree_filter(const Triple& t, i64 n) {
    const i64 o[3] = {root_order(t[0], n), root_order(t[1], n), root_order(t[2], n)};
    const i64 phi_n = euler_phi(lcm(lcm(o[0], o[1]), o[2]));
    for (int i = 0; i < 3; ++i)
        if (phi_n > 2 * euler_phi(lcm(o[(i + 1) % 3], o[(i + 2) % 3]))) return false;
    return true;
}

/// Triples satisfying the reduction predicate with common order exactly n, in lexicographic order.
inline std::vector<Triple> reduced_triples(i64 n, bool filtered = true) {
    if (n < 2) throw std::invalid_argument("reduced_triples: n >= 2");
    std::vector<Triple> out;
    for (i64 e1 : divisors(n))
        for (i64 e2 = 1; 2 * e2 <= n; ++e2)
            for (i64 e3 = e2; 2 * e3 <= n; ++e3) {
                Triple t{e1, e2, e3};
                if (!reduction_predicate(t, n) || common_order(t, n) != n) continue;
                if (filtered && !degree_filter(t, n)) continue;
                out.push_back(t);
            }
    return out;
}

/// Visit every image of t under the 48 signed permutations combined with the units mod n
/// (images may repeat).
template <class F>
void for_each_image(const Triple& t, i64 n, const std::vector<i64>& units, F&& f) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (i64 u : units) {
        const Triple m{mod(u * t[0], n), mod(u * t[1], n), mod(u * t[2], n)};
        for (auto& p : perms)
            for (int signs = 0; signs < 8; ++signs) {
                Triple s;
                for (int i = 0; i < 3; ++i) s[i] = wrap_exponent((signs >> i) & 1 ? n - m[p[i]] : m[p[i]], n);
                f(s);
            }
    }
}

inline std::set<Triple> orbit(const Triple& t, i64 n) {
    std::set<Triple> out;
    for_each_image(t, n, units_mod(n), [&](const Triple& s) { out.insert(s); });
    return out;
}

/// Lexicographically smallest orbit member satisfying the reduction predicate. Triples with a
/// coordinate equal to 1 (exponent ≡ 0) have no such member and are rejected.
inline Triple canonicalize(const Triple& t, i64 n, const std::vector<i64>& units) {
    for (i64 e : t)
        if (mod(e, n) == 0) throw std::invalid_argument("canonicalize: a coordinate equals 1");
    std::optional<Triple> best;
    for_each_image(t, n, units, [&](const Triple& s) {
        if ((!best || s < *best) && reduction_predicate(s, n)) best = s;
    });
    if (!best) throw std::logic_error("canonicalize: orbit without a reduced member");
    return *best;
}

inline Triple canonicalize(const Triple& t, i64 n) { return canonicalize(t, n, units_mod(n)); }

/// Symmetry classes of common order exactly n with no coordinate equal to 1, one canonical
/// representative each.
inline std::vector<Triple> triple_classes(i64 n, bool filtered = true) {
    std::set<Triple> classes;
    const auto units = units_mod(n);
    for (const Triple& t : reduced_triples(n, filtered)) classes.insert(canonicalize(t, n, units));
    return {classes.begin(), classes.end()};
}

}  // namespace rang
