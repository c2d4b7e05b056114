#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "pierce/rational.hpp"

namespace pierce {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Lexicographic order by (x, y).
inline bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

inline std::string to_string(const Point& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

/// z-component of (b - a) x (c - a): > 0 for a counterclockwise turn,
/// 0 when collinear.
inline Rational orientation(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

using Segment = std::pair<Point, Point>;

/// p lies on the closed segment s.
inline bool on_segment(const Point& p, const Segment& s) {
    if (orientation(s.first, s.second, p) != 0) return false;
    const auto& [a, b] = s;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Intersection of two closed segments. When the intersection is a whole
// segment the lexicographically smallest endpoint is returned, so the result
// is deterministic. Degenerate (single-point) segments are allowed.
inline std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2) {
    const Point d1{s1.second.x - s1.first.x, s1.second.y - s1.first.y};
    const Point d2{s2.second.x - s2.first.x, s2.second.y - s2.first.y};

    if (d1.x == 0 && d1.y == 0) {
        if (on_segment(s1.first, s2)) return s1.first;
        return std::nullopt;
    }
    if (d2.x == 0 && d2.y == 0) {
        if (on_segment(s2.first, s1)) return s2.first;
        return std::nullopt;
    }

    const Rational denom = d1.x * d2.y - d1.y * d2.x;
    if (denom != 0) {
        const Point w{s2.first.x - s1.first.x, s2.first.y - s1.first.y};
        const Rational t = (w.x * d2.y - w.y * d2.x) / denom;
        const Rational u = (w.x * d1.y - w.y * d1.x) / denom;
        if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
        return Point{s1.first.x + t * d1.x, s1.first.y + t * d1.y};
    }

    // Parallel. Overlap is possible only when collinear.
    if (orientation(s1.first, s1.second, s2.first) != 0) return std::nullopt;
    Point lo1 = s1.first, hi1 = s1.second;
    if (lex_less(hi1, lo1)) std::swap(lo1, hi1);
    Point lo2 = s2.first, hi2 = s2.second;
    if (lex_less(hi2, lo2)) std::swap(lo2, hi2);
    // For collinear points lexicographic order agrees with the order along the line.
    Point lo = lex_less(lo1, lo2) ? lo2 : lo1;
    Point hi = lex_less(hi1, hi2) ? hi1 : hi2;
    if (lex_less(hi, lo)) return std::nullopt;
    return lo;
}

} // namespace pierce
