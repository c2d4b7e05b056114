#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pierce/feasible.hpp"

namespace pierce {

// Convex region as a finite conjunction of closed half-planes. The H-form is
// the single source of truth; an empty constraint list is the whole plane.
// The list may contain redundant constraints; canonicalized() (normalized,
// sorted, deduplicated) is the representative used for equality.
struct ConvexRegion {
    std::string label;
    std::vector<HalfPlane> constraints;
};

inline bool contains(const ConvexRegion& r, const Point& p) {
    return std::all_of(r.constraints.begin(), r.constraints.end(),
                       [&](const HalfPlane& h) { return h.contains(p); });
}

inline ConvexRegion canonicalized(const ConvexRegion& r) {
    ConvexRegion out = r;
    std::sort(out.constraints.begin(), out.constraints.end(), halfplane_less);
    out.constraints.erase(std::unique(out.constraints.begin(), out.constraints.end()),
                          out.constraints.end());
    return out;
}

/// Same canonical constraint list (labels are not compared).
inline bool same_region(const ConvexRegion& r1, const ConvexRegion& r2) {
    return canonicalized(r1).constraints == canonicalized(r2).constraints;
}

/// Set intersection; keeps the left operand's label.
inline ConvexRegion intersect(const ConvexRegion& r1, const ConvexRegion& r2) {
    ConvexRegion out{r1.label, r1.constraints};
    out.constraints.insert(out.constraints.end(), r2.constraints.begin(), r2.constraints.end());
    return canonicalized(out);
}

inline std::optional<Point> feasible_point(const ConvexRegion& r) { return feasible(r.constraints); }

inline bool is_empty(const ConvexRegion& r) { return !feasible(r.constraints); }

// Bounded iff nonempty and the recession cone {d : a.d <= 0 for all
// constraints} is trivial. A nonzero recession direction can be scaled until
// its largest coordinate is +-1, so four feasibility probes of the homogeneous
// system decide exactness-preserving boundedness.
inline bool is_bounded(const ConvexRegion& r) {
    if (is_empty(r)) return false;
    std::vector<HalfPlane> cone;
    cone.reserve(r.constraints.size() + 2);
    for (const HalfPlane& h : r.constraints) cone.emplace_back(h.a, h.b, Rational(0));
    struct Probe {
        Rational a, b, c;
    };
    for (const auto& [a, b, c] : {Probe{1, 0, 1}, Probe{-1, 0, -1}, Probe{0, 1, 1}, Probe{0, -1, -1}}) {
        auto sys = cone;
        sys.emplace_back(a, b, c);   // pins one coordinate to +-1...
        sys.emplace_back(-a, -b, -c); // ...from both sides
        if (feasible(sys)) return false;
    }
    return true;
}

// Convex hull of a point set by monotone chain with strict turns, so only
// extreme points survive. Returns them counterclockwise starting from the
// lexicographically smallest; a segment yields its two endpoints, a single
// point itself.
inline std::vector<Point> hull_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) { // lower hull
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower_end = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) { // upper hull
        while (k >= lower_end && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1); // last point repeats the first
    return hull;
}

// Extreme points of a nonempty bounded region, counterclockwise from the
// lexicographically smallest. Candidates are the pairwise intersections of
// boundary lines filtered by membership; boundedness makes that set complete.
inline std::vector<Point> vertices(const ConvexRegion& r) {
    if (is_empty(r)) throw Error(Errc::empty_region, "vertices of empty region '" + r.label + "'");
    if (!is_bounded(r))
        throw Error(Errc::unbounded_region, "vertices of unbounded region '" + r.label + "'");

    std::vector<Line> lines;
    for (const HalfPlane& h : r.constraints) lines.emplace_back(h);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    std::vector<Point> candidates;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto p = line_intersection(lines[i], lines[j]); p && contains(r, *p))
                candidates.push_back(*p);
    return hull_points(std::move(candidates));
}

// H-representation of conv(points). Degenerate hulls are encoded exactly: a
// segment as its line (two opposing half-planes) plus end caps, a single point
// as two coordinate equalities.
inline ConvexRegion convex_hull(const std::vector<Point>& points, std::string label = {}) {
    if (points.empty()) throw Error(Errc::invalid_input, "convex hull of no points");
    const std::vector<Point> hull = hull_points(points);
    ConvexRegion out{std::move(label), {}};

    if (hull.size() == 1) {
        const Point& p = hull.front();
        out.constraints = {{1, 0, p.x}, {-1, 0, -p.x}, {0, 1, p.y}, {0, -1, -p.y}};
        return canonicalized(out);
    }
    if (hull.size() == 2) {
        const Point &p = hull[0], &q = hull[1];
        const Rational dx = q.x - p.x, dy = q.y - p.y;
        const Rational k = dy * p.x - dx * p.y;
        out.constraints = {{dy, -dx, k},
                           {-dy, dx, -k},
                           {dx, dy, dx * q.x + dy * q.y},
                           {-dx, -dy, -(dx * p.x + dy * p.y)}};
        return canonicalized(out);
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point &p = hull[i], &q = hull[(i + 1) % hull.size()];
        const Rational dx = q.x - p.x, dy = q.y - p.y;
        // Interior lies left of each CCW edge: dy*x - dx*y <= dy*px - dx*py.
        out.constraints.emplace_back(dy, -dx, dy * p.x - dx * p.y);
    }
    return canonicalized(out);
}

} // namespace pierce
