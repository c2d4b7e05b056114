#pragma once

#include <optional>
#include <tuple>

#include "pierce/point.hpp"

namespace pierce {

// Closed half-plane {(x, y) : a*x + b*y <= c}. Construction scales (a, b, c)
// by the unique positive rational that makes them coprime integers, so equal
// half-planes have identical fields.
struct HalfPlane {
    Rational a;
    Rational b;
    Rational c;

    HalfPlane(Rational a_, Rational b_, Rational c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (a == 0 && b == 0) throw Error(Errc::invalid_input, "half-plane with zero normal");
        normalize();
    }

    bool contains(const Point& p) const { return a * p.x + b * p.y <= c; }

    /// a*x + b*y - c; <= 0 inside, 0 on the boundary line.
    Rational eval(const Point& p) const { return a * p.x + b * p.y - c; }

    friend bool operator==(const HalfPlane& l, const HalfPlane& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator!=(const HalfPlane& l, const HalfPlane& r) { return !(l == r); }

private:
    void normalize() {
        using boost::multiprecision::gcd;
        using boost::multiprecision::lcm;
        Int num_gcd = gcd(gcd(abs(rational_num(a)), abs(rational_num(b))), abs(rational_num(c)));
        Int den_lcm = lcm(lcm(rational_den(a), rational_den(b)), rational_den(c));
        const Rational scale(den_lcm, num_gcd == 0 ? Int(1) : num_gcd);
        a *= scale;
        b *= scale;
        c *= scale;
    }
};

inline bool halfplane_less(const HalfPlane& l, const HalfPlane& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
}

// Boundary line a*x + b*y = c in a sign-canonical form, usable as a map key:
// the same line is reached from a half-plane and from its complement.
struct Line {
    Rational a;
    Rational b;
    Rational c;

    explicit Line(const HalfPlane& h) : a(h.a), b(h.b), c(h.c) {
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
            c = -c;
        }
    }

    friend bool operator==(const Line& l, const Line& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const Line& l, const Line& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

/// Intersection point of two lines; absent when parallel (or identical).
inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
    const Rational det = l1.a * l2.b - l2.a * l1.b;
    if (det == 0) return std::nullopt;
    return Point{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

} // namespace pierce
