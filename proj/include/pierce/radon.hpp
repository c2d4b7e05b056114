#pragma once

#include <array>
#include <vector>

#include "pierce/point.hpp"

namespace pierce {

// A split of four points into two complementary nonempty parts whose convex
// hulls share common_point. Indices are 1-based.
struct RadonPartition {
    std::vector<int> part_a;
    std::vector<int> part_b;
    Point common_point;
};

/// p in conv{a, b, c}, degenerate triangles included.
inline bool point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    const Rational det = orientation(a, b, c);
    if (det == 0) {
        // Collinear: the hull is the segment between the two lexicographic extremes.
        Point lo = a, hi = a;
        for (const Point& q : {b, c}) {
            if (lex_less(q, lo)) lo = q;
            if (lex_less(hi, q)) hi = q;
        }
        return on_segment(p, {lo, hi});
    }
    const Rational o1 = orientation(a, b, p);
    const Rational o2 = orientation(b, c, p);
    const Rational o3 = orientation(c, a, p);
    if (det > 0) return o1 >= 0 && o2 >= 0 && o3 >= 0;
    return o1 <= 0 && o2 <= 0 && o3 <= 0;
}

// Radon partition of four (not necessarily distinct) points. All bipartitions
// are scanned in a fixed canonical order -- singletons {1}..{4}, then the pairs
// {1,2}, {1,3}, {1,4} -- and the first one whose parts' hulls meet is returned,
// so degenerate inputs get a deterministic answer. Existence is Radon's lemma.
inline RadonPartition radon_partition(const std::array<Point, 4>& pts) {
    static constexpr std::array<std::array<int, 2>, 7> kPartAChoices = {{
        {1, 0}, {2, 0}, {3, 0}, {4, 0}, {1, 2}, {1, 3}, {1, 4},
    }};
    for (const auto& choice : kPartAChoices) {
        std::vector<int> part_a;
        for (int idx : choice)
            if (idx != 0) part_a.push_back(idx);
        std::vector<int> part_b;
        for (int idx = 1; idx <= 4; ++idx)
            if (std::find(part_a.begin(), part_a.end(), idx) == part_a.end())
                part_b.push_back(idx);

        std::optional<Point> witness;
        if (part_a.size() == 1) {
            const Point& p = pts[part_a[0] - 1];
            if (point_in_triangle(p, pts[part_b[0] - 1], pts[part_b[1] - 1], pts[part_b[2] - 1]))
                witness = p;
        } else {
            witness = segment_intersection({pts[part_a[0] - 1], pts[part_a[1] - 1]},
                                           {pts[part_b[0] - 1], pts[part_b[1] - 1]});
        }
        if (witness) return RadonPartition{part_a, part_b, *witness};
    }
    throw Error(Errc::invalid_input, "no Radon partition found; impossible for 4 planar points");
}

} // namespace pierce
