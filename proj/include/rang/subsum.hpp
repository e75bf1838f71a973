#pragma once
// Vanishing-subsum engine: classify subsets of an equation's monomials by the lattice
// their exponent differences generate, and turn that into bounds on root-of-unity orders.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rang/ntheory.hpp"
#include "rang/polyring.hpp"

namespace rang {

using Vec3 = std::array<i64, 3>;
using IntMatrix = std::vector<std::vector<i64>>;

struct EmptySubset : std::invalid_argument {
    EmptySubset() : std::invalid_argument("subset is empty") {}
};

namespace detail {
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in lattice reduction");
    return r;
}
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in lattice reduction");
    return r;
}
inline i64 iabs(i64 a) { return a < 0 ? -a : a; }

// g = s·a + t·b with g = gcd(a, b) ≥ 0
inline void ext_gcd(i64 a, i64 b, i64& g, i64& s, i64& t) {
    i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        i64 q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    g = a;
    s = s0;
    t = t0;
}
}  // namespace detail

/// Exponent vectors of the monomials of one equation, in x, y, z.
struct TermSet {
    std::string label;
    std::vector<Vec3> exponents;
    std::size_t size() const { return exponents.size(); }
};

/// Distinct (x, y, z) exponent vectors of a master equation, sorted.
inline TermSet term_set(const std::string& id) {
    std::set<Vec3> s;
    for (auto& [e, c] : equation_poly(id).terms()) s.insert({e[VX], e[VY], e[VZ]});
    return {id, std::vector<Vec3>(s.begin(), s.end())};
}

// ---------------------------------------------------------------- Smith normal form

struct SmithForm {
    std::vector<i64> diagonal;  // positive, each dividing the next
    int rank = 0;
};

inline SmithForm smith_normal_form(IntMatrix m) {
    using namespace detail;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SmithForm out;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // full pivoting: smallest nonzero absolute entry in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || iabs(m[i][j]) < iabs(m[pr][pc]))) pr = i, pc = j;
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                i64 q = m[i][t] / m[t][t];
                if (q)
                    for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_add(m[i][j], -checked_mul(q, m[t][j]));
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                i64 q = m[t][j] / m[t][t];
                if (q)
                    for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_add(m[i][j], -checked_mul(q, m[i][t]));
                if (m[t][j] != 0) {
                    for (auto& row : m) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // the pivot must divide the whole remaining block
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k) m[t][k] = checked_add(m[t][k], m[i][k]);
                            clean = false;
                            break;
                        }
            }
        }
        out.diagonal.push_back(iabs(m[t][t]));
        ++t;
    }
    out.rank = static_cast<int>(out.diagonal.size());
    return out;
}

// ---------------------------------------------------------------- incremental lattice in Z^3

/// A sublattice of Z^3 kept in Hermite normal form; row c, when present, has its pivot in column c.
class Lattice3 {
public:
    void insert(Vec3 v) {
        using namespace detail;
        for (int c = 0; c < 3; ++c) {
            if (v[c] == 0) continue;
            if (h_[c][c] == 0) {
                if (v[c] < 0)
                    for (auto& x : v) x = -x;
                h_[c] = v;
                normalize();
                return;
            }
            i64 a = h_[c][c], b = v[c], g, s, t;
            ext_gcd(a, b, g, s, t);
            Vec3 top{}, rest{};
            for (int j = 0; j < 3; ++j) {
                top[j] = checked_add(checked_mul(s, h_[c][j]), checked_mul(t, v[j]));
                rest[j] = checked_add(checked_mul(-(b / g), h_[c][j]), checked_mul(a / g, v[j]));
            }
            h_[c] = top;
            v = rest;
        }
        normalize();
    }

    int rank() const { return (h_[0][0] != 0) + (h_[1][1] != 0) + (h_[2][2] != 0); }
    /// Index of the lattice in Z^3 (0 when rank < 3).
    i64 index() const { return h_[0][0] * h_[1][1] * h_[2][2]; }
    bool is_everything() const { return h_[0][0] == 1 && h_[1][1] == 1 && h_[2][2] == 1; }

    /// Exponent of Z^3 / L for a full-rank lattice: index over the gcd of the 2x2 minors.
    i64 exponent() const {
        i64 det = index();
        if (det == 0) return 0;
        i64 g = 0;
        for (int r1 = 0; r1 < 3; ++r1)
            for (int r2 = r1 + 1; r2 < 3; ++r2)
                for (int c1 = 0; c1 < 3; ++c1)
                    for (int c2 = c1 + 1; c2 < 3; ++c2)
                        g = std::gcd(g, h_[r1][c1] * h_[r2][c2] - h_[r1][c2] * h_[r2][c1]);
        return det / g;
    }

    std::vector<Vec3> basis() const {
        std::vector<Vec3> b;
        for (int c = 0; c < 3; ++c)
            if (h_[c][c] != 0) b.push_back(h_[c]);
        return b;
    }

private:
    void normalize() {
        for (int c = 0; c < 3; ++c) {
            i64 p = h_[c][c];
            if (p == 0) continue;
            for (int r = 0; r < c; ++r) {
                i64 q = h_[r][c] / p;
                if (h_[r][c] - q * p < 0) --q;
                if (q)
                    for (int j = 0; j < 3; ++j) h_[r][j] -= q * h_[c][j];
            }
        }
    }
    std::array<Vec3, 3> h_{};
};

// ---------------------------------------------------------------- classification

/// Rows i − i₀ for the members of `subset`, with i₀ the member at position `base`.
inline IntMatrix difference_module(const TermSet& terms, const std::vector<int>& subset, std::size_t base = 0) {
    if (subset.empty()) throw EmptySubset();
    const Vec3& b = terms.exponents.at(subset.at(base));
    IntMatrix rows;
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (k == base) continue;
        const Vec3& v = terms.exponents.at(subset[k]);
        rows.push_back({v[0] - b[0], v[1] - b[1], v[2] - b[2]});
    }
    if (rows.empty()) rows.push_back({0, 0, 0});
    return rows;
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// Divide out the content and make the first nonzero coordinate positive.
inline Vec3 primitive_direction(Vec3 v) {
    i64 g = std::gcd(std::gcd(v[0], v[1]), v[2]);
    if (g == 0) throw std::invalid_argument("zero direction");
    for (auto& x : v) x /= g;
    for (auto x : v)
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    return v;
}

/// A primitive integer vector orthogonal to a lattice of rank < 3.
inline Vec3 kernel_direction(const Lattice3& L) {
    auto b = L.basis();
    if (b.empty()) return {1, 0, 0};
    if (b.size() == 2) return primitive_direction(cross(b[0], b[1]));
    for (int j = 0; j < 3; ++j) {
        Vec3 e{};
        e[j] = 1;
        Vec3 w = cross(b[0], e);
        if (w != Vec3{0, 0, 0}) return primitive_direction(w);
    }
    throw std::logic_error("unreachable");
}

struct SubsumReport {
    std::vector<int> subset;
    bool finite = false;
    Vec3 direction{};          // meaningful when !finite
    i64 exponent = 0;          // meaningful when finite
    std::vector<i64> snf_diagonal;
    bool trivial_quotient() const { return finite && exponent == 1; }
};

inline SubsumReport classify_subset(const TermSet& terms, const std::vector<int>& subset) {
    SubsumReport r;
    r.subset = subset;
    IntMatrix rows = difference_module(terms, subset);
    Lattice3 L;
    for (auto& row : rows) L.insert({row[0], row[1], row[2]});
    auto snf = smith_normal_form(rows);
    r.snf_diagonal = snf.diagonal;
    if (snf.rank < 3) {
        r.direction = kernel_direction(L);
    } else {
        r.finite = true;
        r.exponent = snf.diagonal.back();
    }
    return r;
}

// ---------------------------------------------------------------- exhaustive sweep

/// What the sweep hands to a predicate: the shape of the quotient Z^3 / M.
struct QuotientShape {
    int rank = 0;
    i64 exponent = 0;  // 0 when rank < 3
};

struct SweepReport {
    std::string label;
    int k = 0;
    std::uint64_t subsets = 0;
    std::uint64_t finite = 0;
    std::uint64_t trivial = 0;  // M = Z^3
    bool all_full_rank = true;
    bool all_trivial = true;
    i64 max_exponent = 0;
    std::map<i64, std::uint64_t> exponent_counts;
    std::uint64_t predicate_failures = 0;
    std::optional<std::vector<int>> first_failure;  // lexicographically smallest
    double elapsed_seconds = 0;
};

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace detail {
struct SweepPartial {
    std::uint64_t subsets = 0, finite = 0, trivial = 0, failures = 0;
    std::map<i64, std::uint64_t> exps;
    std::optional<std::vector<int>> first_failure;
};

struct SweepWalker {
    const TermSet& terms;
    int n, k;
    const std::function<bool(const QuotientShape&)>* predicate;
    SweepPartial out;
    std::vector<int> chosen;

    void record(const QuotientShape& q, std::uint64_t count) {
        out.subsets += count;
        if (q.rank == 3) {
            out.finite += count;
            out.exps[q.exponent] += count;
            if (q.exponent == 1) out.trivial += count;
        }
        if (*predicate && !(*predicate)(q)) {
            out.failures += count;
            if (!out.first_failure) {
                // smallest completion of the current prefix
                std::vector<int> s = chosen;
                for (int i = s.empty() ? 0 : s.back() + 1; static_cast<int>(s.size()) < k; ++i) s.push_back(i);
                out.first_failure = s;
            }
        }
    }

    void walk(const Lattice3& L, int next) {
        const int depth = static_cast<int>(chosen.size());
        if (depth == k) {
            record({L.rank(), L.rank() == 3 ? L.exponent() : 0}, 1);
            return;
        }
        if (L.is_everything()) {
            record({3, 1}, binomial(n - next, k - depth));
            return;
        }
        const Vec3& b = terms.exponents[chosen[0]];
        for (int i = next; i <= n - (k - depth); ++i) {
            const Vec3& v = terms.exponents[i];
            Lattice3 L2 = L;
            L2.insert({v[0] - b[0], v[1] - b[1], v[2] - b[2]});
            chosen.push_back(i);
            walk(L2, i + 1);
            chosen.pop_back();
        }
    }
};
}  // namespace detail

/// Visit all k-subsets of `terms` and aggregate their classifications. Work is split into
/// chunks by the two smallest indices (lexicographic order) and merged in chunk order, so the
/// result does not depend on `jobs`. A predicate, if given, is checked for every subset.
inline SweepReport sweep_subsets(const TermSet& terms, int k, std::function<bool(const QuotientShape&)> predicate = {},
                                 unsigned jobs = 0) {
    const int n = static_cast<int>(terms.size());
    if (k < 1 || k > n) throw std::invalid_argument("sweep_subsets: need 1 <= k <= |terms|");
    auto start = std::chrono::steady_clock::now();

    std::vector<std::vector<int>> prefixes;
    if (k == 1) {
        for (int i = 0; i < n; ++i) prefixes.push_back({i});
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (n - j - 1 >= k - 2) prefixes.push_back({i, j});
    }
    std::vector<detail::SweepPartial> parts(prefixes.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t c; (c = cursor.fetch_add(1)) < prefixes.size();) {
            detail::SweepWalker w{terms, n, k, &predicate, {}, prefixes[c]};
            Lattice3 L;
            const Vec3& b = terms.exponents[prefixes[c][0]];
            for (std::size_t t = 1; t < prefixes[c].size(); ++t) {
                const Vec3& v = terms.exponents[prefixes[c][t]];
                L.insert({v[0] - b[0], v[1] - b[1], v[2] - b[2]});
            }
            w.walk(L, prefixes[c].back() + 1);
            parts[c] = std::move(w.out);
        }
    };
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, prefixes.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepReport r;
    r.label = terms.label;
    r.k = k;
    for (auto& p : parts) {
        r.subsets += p.subsets;
        r.finite += p.finite;
        r.trivial += p.trivial;
        r.predicate_failures += p.failures;
        for (auto [e, c] : p.exps) r.exponent_counts[e] += c;
        if (!r.first_failure && p.first_failure) r.first_failure = p.first_failure;
    }
    r.all_full_rank = r.finite == r.subsets;
    r.all_trivial = r.trivial == r.subsets;
    r.max_exponent = r.exponent_counts.empty() ? 0 : r.exponent_counts.rbegin()->first;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---------------------------------------------------------------- exponent catalogue

/// Nonzero pairwise differences of the exponent vectors, deduplicated and sorted.
inline std::vector<Vec3> difference_set(const TermSet& terms) {
    std::set<Vec3> w;
    for (auto& u : terms.exponents)
        for (auto& v : terms.exponents)
            if (u != v) w.insert({u[0] - v[0], u[1] - v[1], u[2] - v[2]});
    return {w.begin(), w.end()};
}

/// Exponent of Z^3 / (Z u + Z v + Z w), or 0 when the quotient is infinite.
inline i64 triple_exponent(const Vec3& u, const Vec3& v, const Vec3& w) {
    Vec3 c = cross(v, w);
    i64 det = detail::iabs(u[0] * c[0] + u[1] * c[1] + u[2] * c[2]);
    if (det == 0) return 0;
    const std::array<Vec3, 3> m{u, v, w};
    i64 g = 0;
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = c1 + 1; c2 < 3; ++c2)
                    g = std::gcd(g, m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
    return det / g;
}

/// Every exponent of a finite quotient by three vectors of the difference set.
inline std::set<i64> exponent_catalogue(const TermSet& terms) {
    auto W = difference_set(terms);
    std::set<i64> out;
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j) {
            Vec3 c = cross(W[i], W[j]);
            if (c == Vec3{0, 0, 0}) continue;
            for (std::size_t k = j + 1; k < W.size(); ++k)
                if (i64 e = triple_exponent(W[i], W[j], W[k])) out.insert(e);
        }
    return out;
}

// ---------------------------------------------------------------- order bounds

/// Squarefree n with Σ_{p | n} (p − 2) ≤ l − 2: the possible orders of a minimal
/// normalised vanishing sum of l roots of unity.
inline std::vector<i64> conway_jones_orders(int l) {
    if (l < 2) throw std::invalid_argument("conway_jones_orders: l >= 2");
    std::vector<i64> primes;
    for (i64 p = 2; p <= l; ++p)
        if (is_prime(p)) primes.push_back(p);
    std::vector<i64> out;
    std::function<void(std::size_t, i64, i64)> rec = [&](std::size_t i, i64 prod, i64 budget) {
        if (i == primes.size()) {
            out.push_back(prod);
            return;
        }
        rec(i + 1, prod, budget);
        if (primes[i] - 2 <= budget) rec(i + 1, prod * primes[i], budget - (primes[i] - 2));
    };
    rec(0, 1, l - 2);
    std::sort(out.begin(), out.end());
    return out;
}

inline i64 primorial(i64 m) {
    i64 r = 1;
    for (i64 p = 2; p <= m; ++p)
        if (is_prime(p)) r *= p;
    return r;
}

struct DivisorBound {
    i64 modulus = 1;              // lcm of every allowed order
    std::vector<i64> maximal;     // allowed orders, none dividing another
    std::vector<i64> excluded;    // minimal divisors of `modulus` dividing no allowed order
};

/// Orders allowed for x, y, z outside unbounded families. Long case (longest vanishing subsum
/// has at least `threshold` terms): `long_factor` times a Conway–Jones order for the whole term
/// count. Short case: a catalogued exponent times the product of primes below `threshold`.
inline DivisorBound divisor_bound(const TermSet& terms, int threshold, i64 long_factor,
                                  const std::set<i64>& catalogue) {
    std::vector<i64> all;
    for (i64 n : conway_jones_orders(static_cast<int>(terms.size()))) all.push_back(long_factor * n);
    const i64 short_primes = primorial(threshold - 1);
    for (i64 e : catalogue) all.push_back(e * short_primes);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    DivisorBound out;
    for (i64 m : all) {
        bool dominated = std::any_of(all.begin(), all.end(), [&](i64 o) { return o != m && o % m == 0; });
        if (!dominated) out.maximal.push_back(m);
        out.modulus = lcm(out.modulus, m);
    }
    auto allowed = [&](i64 d) { return std::any_of(out.maximal.begin(), out.maximal.end(), [&](i64 m) { return m % d == 0; }); };
    for (i64 d : divisors(out.modulus)) {
        if (allowed(d)) continue;
        bool minimal = true;
        for (auto [p, e] : factorize(d))
            if (!allowed(d / p)) minimal = false;
        if (minimal) out.excluded.push_back(d);
    }
    return out;
}

inline DivisorBound divisor_bound(const TermSet& terms, int threshold, i64 long_factor) {
    return divisor_bound(terms, threshold, long_factor, exponent_catalogue(terms));
}

/// Threshold and long-case factor for each master equation, as established by the sweeps.
struct BoundParameters {
    int threshold;
    i64 long_factor;
};
inline BoundParameters bound_parameters(const std::string& id) {
    if (id == "main") return {10, 2};
    if (id == "3plus2") return {9, 1};
    if (id == "abcd") return {5, 1};
    throw std::invalid_argument("unknown equation id: " + id);
}

}  // namespace rang
