#pragma once
// Exact rationals, elements of cyclotomic fields, and quadratic extensions of them.

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rang/ntheory.hpp"

namespace rang {

using Rational = mpq_class;
using Integer = mpz_class;
using Real = boost::multiprecision::mpfr_float;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};
struct OrderOverflow : std::overflow_error {
    explicit OrderOverflow(i64 n) : std::overflow_error("cyclotomic order " + std::to_string(n) + " exceeds cap") {}
};
struct NotCoprime : std::invalid_argument {
    NotCoprime() : std::invalid_argument("galois index not coprime to order") {}
};

// ---------------------------------------------------------------- Rational

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Rational as "num/den" (the denominator is always written).
inline std::string to_string(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }
/// Shortest form: integers without a denominator.
inline std::string show(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw DivisionByZero();
    r.canonicalize();
    return r;
}

/// Nonnegative square root when both parts of the reduced fraction are perfect squares.
inline std::optional<Rational> rational_is_square(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
    return Rational(a, b);
}

// ---------------------------------------------------------------- high precision reals

/// Sets the working precision of newly created Real values for the current scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

struct ComplexReal {
    Real re, im;
};

inline Real pi_real() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

// ---------------------------------------------------------------- Cyclotomic

namespace detail {

struct FieldData {
    i64 n = 1, phi = 1;
    std::vector<i64> cyc;  // Φ_n, monic, length phi + 1
};

inline const FieldData& field(i64 n) {
    static std::mutex mu;
    static std::map<i64, std::unique_ptr<FieldData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<FieldData>();
        slot->n = n;
        slot->phi = euler_phi(n);
        slot->cyc = cyclotomic_poly(n);
    }
    return *slot;
}

inline i64& order_cap() {
    static i64 cap = 1000000;
    return cap;
}

/// Reduce a dense vector indexed by exponents 0..n-1 of ζ_n modulo Φ_n.
inline std::vector<Rational> reduce_dense(std::vector<Rational> v, const FieldData& f) {
    const i64 phi = f.phi;
    for (i64 k = static_cast<i64>(v.size()) - 1; k >= phi; --k) {
        if (sgn(v[k]) == 0) continue;
        Rational c = v[k];
        v[k] = 0;
        i64 base = k - phi;
        for (i64 j = 0; j < phi; ++j) {
            i64 a = f.cyc[j];
            if (a == 0) continue;
            if (a == 1)
                v[base + j] -= c;
            else if (a == -1)
                v[base + j] += c;
            else
                v[base + j] -= c * a;
        }
    }
    v.resize(phi);
    return v;
}

}  // namespace detail

inline void set_order_cap(i64 cap) { detail::order_cap() = cap; }
inline i64 order_cap() { return detail::order_cap(); }

/// An element of Q(ζ_n), stored over the power basis modulo Φ_n.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1) {}
    Cyclotomic(const Rational& r) : n_(1), c_{r} {}
    Cyclotomic(long v) : n_(1), c_{Rational(v)} {}
    Cyclotomic(int v) : n_(1), c_{Rational(v)} {}

    /// Σ coeffs[j] ζ_n^j for any length of coeffs.
    static Cyclotomic from_power_basis(i64 n, const std::vector<Rational>& coeffs) {
        if (n < 1) throw std::invalid_argument("order must be positive");
        if (n > order_cap()) throw OrderOverflow(n);
        i64 h = canonical_order(n);
        std::vector<Rational> dense(h);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (sgn(coeffs[j]) == 0) continue;
            if (h == n) {
                dense[mod(static_cast<i64>(j), n)] += coeffs[j];
            } else {
                // ζ_n = −ζ_h^{(h+1)/2}
                i64 e = mod(static_cast<i64>(j) * ((h + 1) / 2), h);
                if (j % 2)
                    dense[e] -= coeffs[j];
                else
                    dense[e] += coeffs[j];
            }
        }
        Cyclotomic out;
        out.n_ = h;
        out.c_ = detail::reduce_dense(std::move(dense), detail::field(h));
        return out;
    }

    static Cyclotomic zeta(i64 n, i64 k = 1) {
        if (n < 1) throw std::invalid_argument("zeta: n must be positive");
        std::vector<Rational> c(mod(k, n) + 1);
        c.back() = 1;
        return from_power_basis(n, c);
    }

    i64 order() const { return n_; }
    i64 degree() const { return static_cast<i64>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("not rational");
        return c_[0];
    }

    /// The same element written in Q(ζ_m), m a multiple of the current order.
    Cyclotomic promote(i64 m) const {
        m = canonical_order(m);
        if (m == n_) return *this;
        if (m % n_) throw std::invalid_argument("promote: order does not divide target");
        if (m > order_cap()) throw OrderOverflow(m);
        i64 step = m / n_;
        std::vector<Rational> dense(m);
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) dense[static_cast<i64>(j) * step] = c_[j];
        Cyclotomic out;
        out.n_ = m;
        out.c_ = detail::reduce_dense(std::move(dense), detail::field(m));
        return out;
    }

    /// Rewrites the element at the smallest order that contains it.
    Cyclotomic minimized() const {
        if (n_ == 1) return *this;
        for (i64 d : divisors(n_)) {
            if (d == n_) break;
            if (canonical_order(d) != d) continue;
            // Q(ζ_d) is the fixed field of the units congruent to 1 mod d
            if (fixed_by_subgroup(d)) return descend_to(d);
        }
        return *this;
    }

    Cyclotomic galois(i64 i) const {
        if (std::gcd(mod(i, n_), n_) != 1 && n_ != 1) throw NotCoprime();
        if (n_ == 1) return *this;
        std::vector<Rational> dense(n_);
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) dense[mod(static_cast<i64>(j) * i, n_)] += c_[j];
        Cyclotomic out;
        out.n_ = n_;
        out.c_ = detail::reduce_dense(std::move(dense), detail::field(n_));
        return out;
    }

    Cyclotomic conj() const { return galois(-1); }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) {
            Cyclotomic r = a;
            for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
            return r;
        }
        i64 m = common_order(a.n_, b.n_);
        return a.promote(m) + b.promote(m);
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ != b.n_) {
            i64 m = common_order(a.n_, b.n_);
            return a.promote(m) * b.promote(m);
        }
        if (b.n_ == 1 || b.is_rational()) return a.scaled(b.c_[0]);
        if (a.is_rational()) return b.scaled(a.c_[0]);
        const i64 n = a.n_;
        std::vector<Rational> dense(std::max<i64>(n, 2 * a.degree() - 1));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                dense[(i + j) % n] += a.c_[i] * b.c_[j];
            }
        }
        dense.resize(n);
        Cyclotomic r;
        r.n_ = n;
        r.c_ = detail::reduce_dense(std::move(dense), detail::field(n));
        return r;
    }

    Cyclotomic scaled(const Rational& s) const {
        Cyclotomic r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    Cyclotomic inv() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return Cyclotomic(Rational(1 / c_[0]));
        int nz = 0;
        std::size_t at = 0;
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) {
                ++nz;
                at = j;
            }
        if (nz == 1) return zeta(n_, -static_cast<i64>(at)).scaled(Rational(1 / c_[at]));
        return solve_inverse();
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic pow(i64 k) const {
        if (k < 0) return inv().pow(-k);
        Cyclotomic r(1), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        i64 m = common_order(a.n_, b.n_);
        return a.promote(m).c_ == b.promote(m).c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    bool is_real() const { return conj() == *this; }

    static i64 common_order(i64 a, i64 b) {
        i64 m = lcm(a, b);
        if (m > order_cap()) throw OrderOverflow(m);
        return m;
    }

private:
    i64 n_;
    std::vector<Rational> c_;

    // True when σ_u fixes the element for every unit u ≡ 1 mod d.
    bool fixed_by_subgroup(i64 d) const {
        for (i64 u : units_mod(n_))
            if (u % d == 1 % d && u != 1)
                if (galois(u) != *this) return false;
        return true;
    }

    // Express an element known to lie in Q(ζ_d) over the power basis of ζ_d.
    Cyclotomic descend_to(i64 d) const {
        // Solve for coefficients x_j with Σ x_j ζ_d^j = self, j < φ(d), using the images of ζ_d^j in Q(ζ_n).
        i64 ph = euler_phi(d);
        std::vector<std::vector<Rational>> cols;
        for (i64 j = 0; j < ph; ++j) cols.push_back(zeta(d, j).promote(n_).c_);
        auto x = solve_columns(cols, c_);
        Cyclotomic out;
        out.n_ = d;
        out.c_ = std::move(x);
        return out;
    }

    // Least-squares-free exact solve of Σ x_j cols[j] = rhs (system assumed consistent).
    static std::vector<Rational> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                               const std::vector<Rational>& rhs) {
        const std::size_t rows = rhs.size(), nc = cols.size();
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(nc + 1));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < nc; ++c) m[r][c] = cols[c][r];
            m[r][nc] = rhs[r];
        }
        std::vector<std::size_t> pivcol;
        std::size_t pr = 0;
        for (std::size_t c = 0; c < nc && pr < rows; ++c) {
            std::size_t p = pr;
            while (p < rows && sgn(m[p][c]) == 0) ++p;
            if (p == rows) continue;
            std::swap(m[p], m[pr]);
            Rational iv = 1 / m[pr][c];
            for (std::size_t k = c; k <= nc; ++k) m[pr][k] *= iv;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == pr || sgn(m[r][c]) == 0) continue;
                Rational f = m[r][c];
                for (std::size_t k = c; k <= nc; ++k) m[r][k] -= f * m[pr][k];
            }
            pivcol.push_back(c);
            ++pr;
        }
        std::vector<Rational> x(nc);
        for (std::size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = m[r][nc];
        return x;
    }

    // Inverse via the multiplication-by-self matrix.
    Cyclotomic solve_inverse() const {
        std::vector<std::vector<Rational>> cols;
        for (i64 j = 0; j < degree(); ++j) cols.push_back((*this * zeta(n_, j)).c_);
        std::vector<Rational> e(degree());
        e[0] = 1;
        Cyclotomic out;
        out.n_ = n_;
        out.c_ = solve_columns(cols, e);
        return out;
    }
};

inline Cyclotomic zeta(i64 n, i64 k = 1) { return Cyclotomic::zeta(n, k); }

inline Cyclotomic galois_apply(i64 i, const Cyclotomic& u) { return u.galois(i); }

/// Trace from Q(ζ_m) to Q, where m defaults to the element's own order.
inline Rational trace_to_Q(const Cyclotomic& u, i64 field_order = 0) {
    i64 m = field_order ? canonical_order(field_order) : u.order();
    Cyclotomic v = u.promote(m);
    Rational t = 0;
    for (std::size_t j = 0; j < v.coeffs().size(); ++j)
        if (sgn(v.coeffs()[j]) != 0) t += v.coeffs()[j] * ramanujan_sum(m, static_cast<i64>(j));
    return t;
}

struct RootOfUnity {
    i64 order;
    i64 exponent;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// (m, k) with u = ζ_m^k and gcd(k, m) = 1 when u is a root of unity.
inline std::optional<RootOfUnity> as_root_of_unity(const Cyclotomic& u) {
    if (u.is_zero()) return std::nullopt;
    i64 N = lcm(2, u.order());
    if (u.pow(N) != Cyclotomic(1)) return std::nullopt;
    i64 m = N;
    for (auto [p, e] : factorize(N)) {
        while (m % p == 0 && u.pow(m / p) == Cyclotomic(1)) m /= p;
    }
    if (m == 1) return RootOfUnity{1, 0};
    for (i64 k : units_mod(m))
        if (zeta(m, k) == u) return RootOfUnity{m, k};
    return std::nullopt;  // unreachable for a genuine root of unity
}

/// "ζm^k" for roots of unity, otherwise Σ c_j ζn^j over the power basis.
inline std::string to_string(const Cyclotomic& u) {
    if (u.is_rational()) return show(u.to_rational());
    auto zs = [](i64 n, i64 k) { return "ζ" + std::to_string(n) + (k == 1 ? "" : "^" + std::to_string(k)); };
    if (auto r = as_root_of_unity(u)) return zs(r->order, r->exponent);
    Cyclotomic m = u.minimized();
    std::string out;
    for (std::size_t j = 0; j < m.coeffs().size(); ++j) {
        const Rational& c = m.coeffs()[j];
        if (sgn(c) == 0) continue;
        std::string term = j == 0 ? show(abs(c)) : (abs(c) == 1 ? "" : show(abs(c))) + zs(m.order(), static_cast<i64>(j));
        out += out.empty() ? (sgn(c) < 0 ? "-" : "") + term : (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out;
}

/// Complex embedding with ζ_n ↦ exp(2πi/n) at the given binary precision.
inline ComplexReal embed(const Cyclotomic& u, unsigned bits = 128) {
    PrecisionScope scope(bits);
    ComplexReal z{Real(0), Real(0)};
    const i64 n = u.order();
    Real theta = 2 * pi_real() / Real(n);
    for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
        const Rational& c = u.coeffs()[j];
        if (sgn(c) == 0) continue;
        Real cj = to_real(c);
        Real a = theta * Real(static_cast<long>(j));
        z.re += cj * cos(a);
        z.im += cj * sin(a);
    }
    return z;
}

inline std::complex<double> embed_double(const Cyclotomic& u) {
    std::complex<long double> z = 0;
    const long double tw = 2.0L * 3.14159265358979323846264338327950288L / static_cast<long double>(u.order());
    for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
        double c = u.coeffs()[j].get_d();
        if (c == 0) continue;
        z += static_cast<long double>(c) * std::polar(1.0L, tw * static_cast<long double>(j));
    }
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

namespace detail {
inline Rational coeff_l1(const Cyclotomic& u) {
    Rational s = 0;
    for (auto& c : u.coeffs()) s += abs(c);
    return s;
}

// Sign of a real number known to be nonzero, given a way to embed it at a precision.
template <class EmbedFn>
int certified_sign(EmbedFn&& f, const Rational& scale) {
    for (unsigned bits = 256; bits <= 16384; bits *= 2) {
        PrecisionScope scope(bits);
        Real v = f(bits);
        Real bound = to_real(Rational(1) + scale);
        bound = ldexp(bound, -static_cast<int>(bits) + 16);
        if (abs(v) > bound) return v > 0 ? 1 : -1;
    }
    throw std::runtime_error("sign undecided at maximal precision");
}
}  // namespace detail

/// Sign of a real cyclotomic number: exact zero test, then certified numeric sign.
inline int sign_real(const Cyclotomic& u) {
    if (u.is_zero()) return 0;
    if (u.is_rational()) return sgn(u.coeffs()[0]);
    if (!u.is_real()) throw std::domain_error("sign_real: element is not real");
    return detail::certified_sign([&](unsigned bits) { return embed(u, bits).re; }, detail::coeff_l1(u));
}

// ---------------------------------------------------------------- QuadExt

/// p + q·√δ with p, q, δ in a cyclotomic field and δ real and nonzero.
class QuadExt {
public:
    QuadExt(Cyclotomic p, Cyclotomic q, Cyclotomic delta) : p_(std::move(p)), q_(std::move(q)), d_(std::move(delta)) {
        if (d_.is_zero()) throw std::invalid_argument("QuadExt: δ must be nonzero");
        if (!d_.is_real()) throw std::invalid_argument("QuadExt: δ must be real");
        dsign_ = sign_real(d_);
    }
    QuadExt(const Cyclotomic& p, const QuadExt& like) : p_(p), q_(0), d_(like.d_), dsign_(like.dsign_) {}

    const Cyclotomic& p() const { return p_; }
    const Cyclotomic& q() const { return q_; }
    const Cyclotomic& delta() const { return d_; }

    QuadExt lift(const Cyclotomic& c) const { return QuadExt(c, *this); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return a.with(a.p_ + b.p_, a.q_ + b.q_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return a.with(a.p_ - b.p_, a.q_ - b.q_);
    }
    QuadExt operator-() const { return with(-p_, -q_); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        a.check(b);
        return a.with(a.p_ * b.p_ + a.q_ * b.q_ * a.d_, a.p_ * b.q_ + a.q_ * b.p_);
    }
    friend QuadExt operator+(const QuadExt& a, const Cyclotomic& c) { return a.with(a.p_ + c, a.q_); }
    friend QuadExt operator*(const QuadExt& a, const Cyclotomic& c) { return a.with(a.p_ * c, a.q_ * c); }

    /// Norm to the base field, p² − q²δ.
    Cyclotomic norm() const { return p_ * p_ - q_ * q_ * d_; }

    QuadExt inv() const {
        Cyclotomic nm = norm();
        if (nm.is_zero()) throw DivisionByZero();
        Cyclotomic ni = nm.inv();
        return with(p_ * ni, -(q_ * ni));
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inv(); }

    /// √δ ↦ −√δ.
    QuadExt conj_radical() const { return with(p_, -q_); }

    /// Complex conjugation: √δ is real when δ > 0 and purely imaginary when δ < 0.
    QuadExt complex_conj() const {
        Cyclotomic q = q_.conj();
        return with(p_.conj(), dsign_ > 0 ? q : -q);
    }

    bool is_zero() const {
        if (q_.is_zero()) return p_.is_zero();
        if (!norm().is_zero()) return false;
        // δ is a square in the base field; decide numerically which root this is.
        ComplexReal z = embed(512);
        PrecisionScope scope(512);
        Real mag = abs(z.re) + abs(z.im);
        return mag < ldexp(Real(1), -400);
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) { return (a - b).is_zero(); }

    ComplexReal embed(unsigned bits = 128) const {
        ComplexReal P = rang::embed(p_, bits), Q = rang::embed(q_, bits), D = rang::embed(d_, bits);
        PrecisionScope scope(bits);
        Real s = sqrt(abs(D.re));
        if (dsign_ > 0) return {P.re + Q.re * s, P.im + Q.im * s};
        return {P.re - Q.im * s, P.im + Q.re * s};  // q·i·s
    }

    std::complex<double> embed_double() const {
        ComplexReal z = embed(128);
        return {z.re.convert_to<double>(), z.im.convert_to<double>()};
    }

    /// True when the element is real (equal to its complex conjugate).
    bool is_real() const { return complex_conj() == *this; }

private:
    Cyclotomic p_, q_, d_;
    int dsign_ = 1;

    QuadExt with(Cyclotomic p, Cyclotomic q) const {
        QuadExt r = *this;
        r.p_ = std::move(p);
        r.q_ = std::move(q);
        return r;
    }
    void check(const QuadExt& o) const {
        if (!(d_ == o.d_)) throw std::invalid_argument("QuadExt: different radicands");
    }
};

/// Certified sign of a real element of a quadratic extension.
inline int sign_real(const QuadExt& u) {
    if (u.is_zero()) return 0;
    Rational scale = detail::coeff_l1(u.p()) + detail::coeff_l1(u.q()) * (1 + detail::coeff_l1(u.delta()));
    return detail::certified_sign([&](unsigned bits) { return u.embed(bits).re; }, scale);
}

}  // namespace rang
