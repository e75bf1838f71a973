#pragma once
// Rational polygons from rational tuples and back, the appendix construction check, and SVG figures.

#include <cstdio>
#include <fstream>
#include <map>
#include <random>

#include "rang/atlas_registry.hpp"

namespace rang {

struct NotHalfPlaneNormalizable : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateTuple : std::domain_error {
    using std::domain_error::domain_error;
};
struct ParallelSides : std::domain_error {
    ParallelSides() : std::domain_error("polygon has parallel sides") {}
};
struct IrrationalAngle : std::domain_error {
    IrrationalAngle() : std::domain_error("polygon has an angle that is not a rational multiple of π") {}
};
struct DegeneratePolygon : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConstraintInfeasible : std::domain_error {
    using std::domain_error::domain_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using RationalTuple = std::vector<Cyclotomic>;

namespace geo {

inline Cyclotomic re2(const Cyclotomic& z) { return z + z.conj(); }                // 2 Re z
inline Cyclotomic im2(const Cyclotomic& z) { return (z - z.conj()) * -zeta(4); }  // 2 Im z
/// Sign of Im(conj(a)·b): positive when b is counter-clockwise from a.
inline int cross_sign(const Cyclotomic& a, const Cyclotomic& b) { return sign_real(im2(a.conj() * b)); }

/// Rational (α, β) with z = α·e0 + β·e1, or nothing when z is outside their Q-span.
inline std::optional<std::pair<Rational, Rational>> coords(const Cyclotomic& z, const Cyclotomic& e0,
                                                           const Cyclotomic& e1) {
    Cyclotomic den = im2(e0.conj() * e1);
    Cyclotomic a = im2(z.conj() * e1) / den, b = im2(e0.conj() * z) / den;
    if (!a.is_rational() || !b.is_rational()) return std::nullopt;
    return std::make_pair(a.to_rational(), b.to_rational());
}

/// Turning angle from direction a to direction b, as a rational multiple of π in (−1, 1).
inline Rational turn(const Cyclotomic& a, const Cyclotomic& b) {
    auto s = squared_amplitude(a, b);  // e^{2iθ}
    if (!s) throw IrrationalAngle();
    auto r = as_root_of_unity(*s);
    Rational t = make_rational(r->exponent, r->order);  // θ mod π in [0, 1)
    if (cross_sign(a, b) < 0) t -= 1;
    return t;
}

}  // namespace geo

struct PolygonScene {
    std::vector<Cyclotomic> vertices;  // closed: the last vertex joins the first
    std::vector<Rational> interior_angles;  // multiples of π, one per vertex
    struct Ray {
        Cyclotomic to;
        std::string label, colour;
    };
    struct Point {
        Cyclotomic at;
        std::string label;
    };
    struct Segment {
        Cyclotomic from, to;
    };
    std::vector<Ray> rays;
    std::vector<Point> points;
    std::vector<Segment> segments;
    std::string title;
};

/// Multiset of pairwise squared amplitudes, each folded with its inverse to (order, min(k, order−k)).
inline std::multiset<std::pair<i64, i64>> pairwise_amplitudes(const RationalTuple& t) {
    std::multiset<std::pair<i64, i64>> out;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            auto s = squared_amplitude(t[i], t[j]);
            if (!s) throw DegenerateTuple("pair " + std::to_string(i) + "," + std::to_string(j) + " is not a rational angle");
            auto r = as_root_of_unity(*s);
            out.insert({r->order, std::min(r->exponent, r->order - r->exponent)});
        }
    return out;
}

inline void require_rational_tuple(const RationalTuple& t) {
    if (t.size() < 3) throw DegenerateTuple("a rational tuple needs at least 3 elements");
    for (auto& v : t)
        if (v.is_zero()) throw DegenerateTuple("zero vector");
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (geo::cross_sign(t[i], t[j]) == 0) throw DegenerateTuple("parallel pair");
            auto s = squared_amplitude(t[i], t[j]);
            if (!s) throw DegenerateTuple("pair is not a rational angle");
        }
}

/// Interior angles (multiples of π) of a closed polygon, from exact turning angles.
inline std::vector<Rational> interior_angles(const std::vector<Cyclotomic>& p) {
    const std::size_t n = p.size();
    std::vector<Rational> turns(n);
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Cyclotomic in = p[i] - p[(i + n - 1) % n], out = p[(i + 1) % n] - p[i];
        turns[i] = geo::turn(in, out);
        total += turns[i];
    }
    // counter-clockwise traversal turns by +2π in total
    int orient = total == 2 ? 1 : total == -2 ? -1 : 0;
    if (!orient) throw DegeneratePolygon("polygon is not simple");
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = 1 - orient * turns[i];
    return out;
}

/// A convex n-gon with rational angles and no parallel sides whose sides are positive multiples of
/// ±t_i. The tuple is flipped into the upper half-plane and sorted by argument; with w_0, …, w_{n−1}
/// in that order the vertices are 0, w_1, w_1+w_2, …, p = w_1+…+w_{n−2} = a·w_0 + b·w_{n−1}, b·w_{n−1}.
inline PolygonScene polygon_from_tuple(const RationalTuple& t) {
    require_rational_tuple(t);
    RationalTuple w = t;
    for (auto& v : w) {
        int s = sign_real(geo::im2(v));
        if (s < 0 || (s == 0 && sign_real(geo::re2(v)) < 0)) v = -v;
    }
    std::sort(w.begin(), w.end(), [](const Cyclotomic& a, const Cyclotomic& b) { return geo::cross_sign(a, b) > 0; });
    const std::size_t n = w.size();
    const Cyclotomic &e0 = w.front(), &e1 = w.back();
    std::vector<Cyclotomic> p{Cyclotomic(0)};
    for (std::size_t i = 1; i + 1 < n; ++i) p.push_back(p.back() + w[i]);
    auto ab = geo::coords(p.back(), e0, e1);
    if (!ab) throw NotHalfPlaneNormalizable("elements do not span a single rational plane");
    auto [a, b] = *ab;
    if (sgn(a) <= 0 || sgn(b) <= 0) throw NotHalfPlaneNormalizable("partial sum outside the cone of the extreme elements");
    // simplicity: coordinates along (w_0, w_{n−1}) increase along the path
    Rational pa = -1, pb = -1;
    for (auto& v : p) {
        auto c = geo::coords(v, e0, e1);
        if (!c || c->first < pa || c->second < pb || (c->first == pa && c->second == pb))
            throw std::logic_error("constructed polygon is not monotone");
        pa = c->first;
        pb = c->second;
    }
    p.push_back(e1.scaled(b));
    PolygonScene s;
    s.vertices = p;
    s.interior_angles = interior_angles(p);
    return s;
}

/// Side vectors p_{i+1} − p_i of a closed polygon with rational angles and no parallel sides.
inline RationalTuple tuple_from_polygon(const std::vector<Cyclotomic>& p) {
    const std::size_t n = p.size();
    if (n < 3) throw DegeneratePolygon("a polygon needs at least 3 vertices");
    RationalTuple v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(p[(i + 1) % n] - p[i]);
    for (auto& x : v)
        if (x.is_zero()) throw DegeneratePolygon("repeated vertex");
    bool collinear = true;
    for (std::size_t i = 1; i < n; ++i) collinear = collinear && geo::cross_sign(v[0], v[i]) == 0;
    if (collinear) throw DegeneratePolygon("vertices are collinear");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (geo::cross_sign(v[i], v[j]) == 0) throw ParallelSides();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!squared_amplitude(v[i], v[j])) throw IrrationalAngle();
    return v;
}

// ---------------------------------------------------------------- appendix construction

struct AppendixPoint {
    Real x, y;
};

struct AppendixConstruction {
    AppendixPoint O, Dp, D, T, Mc, C;
    double residual;  // |D − (D′+T)/2| / |D′T|
};

/// O = (0, k), T = (k√3, 0) on r = the x-axis, so ∠OTD = 30° with D left of T; C = (k·c, 0) right of
/// T. D solves ∠COD = 60°, M_C is the midpoint of TC and D′ solves ∠M_C O D′ = 120°.
inline AppendixConstruction check_appendix_construction(double c, double scale = 1, unsigned bits = 128) {
    PrecisionScope ps(bits);
    const Real k(scale), s3 = boost::multiprecision::sqrt(Real(3));
    const Real pi = pi_real();
    AppendixPoint O{0, k}, T{k * s3, 0}, C{k * Real(c), 0};
    if (!(C.x > T.x)) throw ConstraintInfeasible("C must lie beyond T, away from the foot of O");
    auto hit = [&](const AppendixPoint& from, const Real& turn) -> AppendixPoint {
        Real ang = boost::multiprecision::atan2(from.y - O.y, from.x - O.x) - turn;
        Real dy = boost::multiprecision::sin(ang), dx = boost::multiprecision::cos(ang);
        if (!(dy < 0)) throw ConstraintInfeasible("ray from O misses the line");
        return {O.x + dx * (-O.y / dy), Real(0)};
    };
    AppendixPoint D = hit(C, pi / 3);
    AppendixPoint Mc{(T.x + C.x) / 2, Real(0)};
    AppendixPoint Dp = hit(Mc, 2 * pi / 3);
    if (!(Dp.x < D.x && D.x < T.x && T.x < Mc.x && Mc.x < C.x)) throw ConstraintInfeasible("points out of order on r");
    Real res = boost::multiprecision::abs(D.x - (Dp.x + T.x) / 2) / (T.x - Dp.x);
    return {O, Dp, D, T, Mc, C, res.convert_to<double>()};
}

/// Random feasible instances: c uniform in (√3, √3 + 40), scale in [1/4, 4).
inline std::vector<AppendixConstruction> appendix_samples(int count, std::uint64_t seed, unsigned bits = 128) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cd(1e-3, 40), sd(0.25, 4);
    std::vector<AppendixConstruction> out;
    for (int i = 0; i < count; ++i) {
        double c = std::sqrt(3.0) + cd(rng), s = sd(rng);
        out.push_back(check_appendix_construction(c, s, bits));
    }
    return out;
}

// ---------------------------------------------------------------- figures

struct FigureSpec {
    std::string id;
    i64 n;
    std::string caption;         // τ as printed in the caption
    Cyclotomic caption_tau;
    Cyclotomic tau;              // τ as placed in the drawing
    std::vector<std::vector<SpaceVector>> tuples;
};

inline const std::vector<FigureSpec>& figures() {
    static const std::vector<FigureSpec> all = [] {
        using detail::q;
        auto V = [](Rational t, Rational c) { return SpaceVector{std::move(t), std::move(c)}; };
        const SpaceVector one{0, 1}, tau{1, 0};
        std::vector<FigureSpec> f;
        Cyclotomic oct = power_basis(8, {1, -1, 1});
        f.push_back({"oct1", 8, "ζ8²−ζ8+1", oct, oct, {{one, tau, V(1, -1)}, {V(1, 1), V(1, q(-1, 2)), V(1, -2)}}});
        f.push_back({"pent1", 10, "ζ10⁴+2ζ10+2", power_basis(10, {2, 2, 0, 0, 1}), power_basis(10, {2, 0, 2, 0, 1}),
                     {{one, tau, V(1, -1)}, {V(1, q(-1, 3)), V(q(1, 3), q(-4, 3)), V(q(4, 5), -1)}}});
        Cyclotomic p2 = power_basis(10, {2, -2, 1});
        f.push_back({"pent2", 10, "ζ10²−2ζ10+2", p2, p2, {{one, tau, V(1, -1)}, {V(1, -4), V(3, -1), V(4, -5)}}});
        Cyclotomic d1 = power_basis(12, {-1, 1, 2, -2});
        f.push_back({"dodec1", 12, "−2ζ12³+2ζ12²+ζ12−1", d1, d1,
                     {{one, tau, V(1, -1)}, {V(q(1, 3), 1), V(1, -2), V(1, q(-3, 4))}}});
        return f;
    }();
    return all;
}

inline const FigureSpec& figure(const std::string& id) {
    for (auto& f : figures())
        if (f.id == id) return f;
    throw UnknownId(id);
}

/// The regular n-gon of roots of unity, rays from O to each tuple element and a labelled τ.
inline PolygonScene figure_scene(const FigureSpec& f) {
    PolygonScene s;
    s.title = "τ = " + f.caption;
    for (i64 k = 0; k < f.n; ++k) s.vertices.push_back(zeta(f.n, k));
    static const char* colours[] = {"#c00000", "#008000", "#0000c0"};
    for (std::size_t t = 0; t < f.tuples.size(); ++t)
        for (auto& v : f.tuples[t]) {
            Cyclotomic z = v.at(f.tau);
            s.rays.push_back({z, v.str(), colours[t % 3]});
            s.points.push_back({z, v.str()});
        }
    s.points.push_back({Cyclotomic(0), "O"});
    return s;
}

inline PolygonScene figure_scene(const std::string& id) { return figure_scene(figure(id)); }

// ---------------------------------------------------------------- SVG

namespace svg {

inline std::string fmt(double v) {
    if (std::fabs(v) < 5e-7) v = 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace svg

/// Deterministic SVG: fixed 800×800 viewport, the scene fitted with a margin, coordinates rounded to six
/// decimals, and each element kind emitted in sorted order.
inline std::string render_svg(const PolygonScene& s) {
    if (!s.vertices.empty()) {
        if (s.vertices.size() < 3) throw DegeneratePolygon("a polygon needs at least 3 vertices");
        const std::size_t n = s.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            Cyclotomic a = s.vertices[(i + 1) % n] - s.vertices[i], b = s.vertices[(i + 2) % n] - s.vertices[(i + 1) % n];
            if (a.is_zero() || geo::cross_sign(a, b) == 0) throw DegeneratePolygon("consecutive sides are parallel");
        }
    }
    auto xy = [](const Cyclotomic& z) {
        auto e = embed(z, 64);
        return std::make_pair(e.re.convert_to<double>(), e.im.convert_to<double>());
    };
    std::vector<std::pair<double, double>> all{{0, 0}};
    for (auto& v : s.vertices) all.push_back(xy(v));
    for (auto& r : s.rays) all.push_back(xy(r.to));
    for (auto& p : s.points) all.push_back(xy(p.at));
    for (auto& g : s.segments) {
        all.push_back(xy(g.from));
        all.push_back(xy(g.to));
    }
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    for (auto [x, y] : all) {
        x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
    const double W = 800, margin = 60;
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    double k = (W - 2 * margin) / span;
    double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
    auto X = [&](double x) { return svg::fmt(W / 2 + k * (x - cx)); };
    auto Y = [&](double y) { return svg::fmt(W / 2 - k * (y - cy)); };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\" stroke=\"black\"/>\n";
    if (!s.title.empty())
        out += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"20\">" +
               svg::escape(s.title) + "</text>\n";
    if (!s.vertices.empty()) {
        std::string pts;
        for (auto& v : s.vertices) {
            auto [x, y] = xy(v);
            pts += (pts.empty() ? "" : " ") + X(x) + "," + Y(y);
        }
        out += "<polygon points=\"" + pts + "\" fill=\"none\" stroke=\"#1f3c99\" stroke-width=\"2\"/>\n";
    }
    std::vector<std::string> lines;
    for (auto& g : s.segments) {
        auto [ax, ay] = xy(g.from);
        auto [bx, by] = xy(g.to);
        lines.push_back("<line x1=\"" + X(ax) + "\" y1=\"" + Y(ay) + "\" x2=\"" + X(bx) + "\" y2=\"" + Y(by) +
                        "\" stroke=\"black\" stroke-width=\"0.8\"/>\n");
    }
    std::sort(lines.begin(), lines.end());
    for (auto& l : lines) out += l;
    lines.clear();
    for (auto& r : s.rays) {
        auto [x, y] = xy(r.to);
        lines.push_back("<line x1=\"" + X(0) + "\" y1=\"" + Y(0) + "\" x2=\"" + X(x) + "\" y2=\"" + Y(y) + "\" stroke=\"" +
                        r.colour + "\" stroke-width=\"2\"><title>" + svg::escape(r.label) + "</title></line>\n");
    }
    std::sort(lines.begin(), lines.end());
    for (auto& l : lines) out += l;
    lines.clear();
    for (auto& p : s.points) {
        auto [x, y] = xy(p.at);
        lines.push_back("<circle cx=\"" + X(x) + "\" cy=\"" + Y(y) + "\" r=\"3\" fill=\"#c00000\"/>\n<text x=\"" +
                        svg::fmt(W / 2 + k * (x - cx) + 6) + "\" y=\"" + svg::fmt(W / 2 - k * (y - cy) - 6) +
                        "\" font-family=\"serif\" font-size=\"14\">" + svg::escape(p.label) + "</text>\n");
    }
    std::sort(lines.begin(), lines.end());
    for (auto& l : lines) out += l;
    out += "</svg>\n";
    return out;
}

inline void write_svg(const PolygonScene& s, const std::string& path) {
    std::string text = render_svg(s);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    f << text;
    if (!f) throw IoError("cannot write " + path);
}

}  // namespace rang
