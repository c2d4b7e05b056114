#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pierce/counterexample.hpp"
#include "pierce/region.hpp"

using namespace pierce;

namespace {

const ConvexRegion kF1{"F1", {HalfPlane(1, 0, 1), HalfPlane(-1, 0, 1), HalfPlane(0, 1, 0),
                              HalfPlane(0, -1, 0)}};
const ConvexRegion kF2{"F2", {HalfPlane(1, 0, 2), HalfPlane(-1, 0, 0), HalfPlane(0, 1, 0),
                              HalfPlane(0, -1, 0)}};
const ConvexRegion kPlane{"plane", {}};

ConvexRegion f3_default() { return wedge_region(3, SequenceConfig::defaults()); }

} // namespace

TEST_CASE("membership in the first segment") {
    REQUIRE(contains(kF1, {0, 0}));
    REQUIRE(contains(kF1, {-1, 0}));
    REQUIRE_FALSE(contains(kF1, {0, Rational(1, 1000000)}));
    REQUIRE(contains(f3_default(), {0, 2})); // threshold height on the y-axis
    REQUIRE_FALSE(contains(f3_default(), {0, Rational(1999, 1000)}));
}

TEST_CASE("intersection with the whole plane is the identity") {
    REQUIRE(same_region(intersect(kPlane, kF1), kF1));
    REQUIRE(same_region(intersect(kF1, kPlane), kF1));
}

TEST_CASE("intersection of the two segments is [0,1] x {0}") {
    const ConvexRegion meet = intersect(kF1, kF2);
    REQUIRE_FALSE(is_empty(meet));
    const auto vs = vertices(meet);
    REQUIRE(vs == std::vector<Point>{{0, 0}, {1, 0}});
}

TEST_CASE("contradictory strips are empty") {
    const ConvexRegion r{"", {HalfPlane(1, 0, 0), HalfPlane(-1, 0, -1)}};
    REQUIRE(is_empty(r));
    REQUIRE_FALSE(is_bounded(r));
}

TEST_CASE("boundedness via the recession cone") {
    REQUIRE_FALSE(is_empty(kF1));
    REQUIRE(is_bounded(kF1));
    REQUIRE_FALSE(is_bounded(f3_default())); // wedge is unbounded
    REQUIRE_FALSE(is_bounded(kPlane));
    const ConvexRegion halfplane{"", {HalfPlane(1, 0, 0)}};
    REQUIRE_FALSE(is_bounded(halfplane));
    const ConvexRegion slab{"", {HalfPlane(0, 1, 1), HalfPlane(0, -1, 0)}};
    REQUIRE_FALSE(is_bounded(slab));
    const ConvexRegion point{"", {HalfPlane(1, 1, 0), HalfPlane(-1, -1, 0), HalfPlane(1, -1, 0),
                                  HalfPlane(-1, 1, 0)}};
    REQUIRE(is_bounded(point));
}

TEST_CASE("vertices of simple regions") {
    const ConvexRegion square{"", {HalfPlane(1, 0, 1), HalfPlane(-1, 0, 0), HalfPlane(0, 1, 1),
                                   HalfPlane(0, -1, 0)}};
    REQUIRE(vertices(square) == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    REQUIRE(vertices(kF1) == std::vector<Point>{{-1, 0}, {1, 0}});

    REQUIRE_THROWS_MATCHES(vertices(f3_default()), Error, Catch::Matchers::MessageMatches(
                                  Catch::Matchers::StartsWith("UNBOUNDED_REGION")));
    const ConvexRegion none{"", {HalfPlane(1, 0, 0), HalfPlane(-1, 0, -1)}};
    REQUIRE_THROWS_MATCHES(vertices(none), Error, Catch::Matchers::MessageMatches(
                                  Catch::Matchers::StartsWith("EMPTY_REGION")));
}

TEST_CASE("redundant constraints do not add vertices") {
    ConvexRegion square{"", {HalfPlane(1, 0, 1), HalfPlane(-1, 0, 0), HalfPlane(0, 1, 1),
                             HalfPlane(0, -1, 0), HalfPlane(1, 1, 5), HalfPlane(1, 1, 2)}};
    REQUIRE(vertices(square) == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("hull of a single point is a pair of coordinate equalities") {
    const ConvexRegion r = convex_hull({{0, 0}});
    REQUIRE(r.constraints.size() == 4);
    REQUIRE(contains(r, {0, 0}));
    REQUIRE_FALSE(contains(r, {0, Rational(1, 100)}));
    REQUIRE(same_region(r, ConvexRegion{"", {HalfPlane(1, 0, 0), HalfPlane(-1, 0, 0),
                                             HalfPlane(0, 1, 0), HalfPlane(0, -1, 0)}}));
}

TEST_CASE("hull of a right triangle has three half-planes") {
    const ConvexRegion r = convex_hull({{0, 0}, {1, 0}, {0, 1}});
    REQUIRE(r.constraints.size() == 3);
    REQUIRE(same_region(r, ConvexRegion{"", {HalfPlane(-1, 0, 0), HalfPlane(0, -1, 0),
                                             HalfPlane(1, 1, 1)}}));
}

TEST_CASE("hull of two box vertex sets is the bounding rectangle") {
    const std::vector<Point> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1},
                                    {3, 0}, {4, 0}, {4, 1}, {3, 1}};
    const ConvexRegion r = convex_hull(pts);
    REQUIRE(same_region(r, box_region("", 0, 4, 0, 1)));
    REQUIRE(vertices(r) == std::vector<Point>{{0, 0}, {4, 0}, {4, 1}, {0, 1}});
}

TEST_CASE("hull of collinear points is the spanning segment") {
    const ConvexRegion r = convex_hull({{0, 0}, {3, 3}, {1, 1}, {2, 2}});
    REQUIRE_FALSE(is_empty(r));
    REQUIRE(is_bounded(r));
    REQUIRE(vertices(r) == std::vector<Point>{{0, 0}, {3, 3}});
    REQUIRE(contains(r, {Rational(1, 2), Rational(1, 2)}));
    REQUIRE_FALSE(contains(r, {Rational(1, 2), Rational(1, 3)}));
}

TEST_CASE("intersection membership distributes") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int round = 0; round < 200; ++round) {
        std::vector<HalfPlane> h1, h2;
        for (int i = 0; i < 3; ++i) {
            int a = c(rng), b = c(rng);
            if (a == 0 && b == 0) a = 1;
            h1.emplace_back(a, b, c(rng));
            a = c(rng);
            b = c(rng);
            if (a == 0 && b == 0) b = 1;
            h2.emplace_back(a, b, c(rng));
        }
        const ConvexRegion r1{"r1", h1}, r2{"r2", h2};
        const ConvexRegion both = intersect(r1, r2);
        const Point p{Rational(c(rng), 2), Rational(c(rng), 2)};
        REQUIRE(contains(both, p) == (contains(r1, p) && contains(r2, p)));
    }
}

TEST_CASE("vertices and hull round-trip on random bounded regions") {
    std::mt19937 rng(5151);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int round = 0; round < 120; ++round) {
        // Random bounded region: a box plus a couple of random cuts.
        int x0 = c(rng), x1 = c(rng), y0 = c(rng), y1 = c(rng);
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        std::vector<HalfPlane> hs = {HalfPlane(1, 0, x1), HalfPlane(-1, 0, -x0),
                                     HalfPlane(0, 1, y1), HalfPlane(0, -1, -y0)};
        for (int i = 0; i < 2; ++i) {
            const int a = c(rng), b = c(rng);
            if (a == 0 && b == 0) continue;
            hs.emplace_back(a, b, c(rng) + 4);
        }
        const ConvexRegion r{"r", hs};
        if (is_empty(r)) continue;
        REQUIRE(is_bounded(r));
        const ConvexRegion back = convex_hull(vertices(r));
        for (int probe = 0; probe < 30; ++probe) {
            const Point p{Rational(c(rng) * 3 + c(rng), 3), Rational(c(rng) * 3 + c(rng), 3)};
            REQUIRE(contains(back, p) == contains(r, p));
        }
    }
}

TEST_CASE("canonical form sorts, deduplicates and normalizes") {
    const ConvexRegion a{"a", {HalfPlane(2, 0, 2), HalfPlane(0, 1, 1), HalfPlane(1, 0, 1)}};
    const ConvexRegion b{"b", {HalfPlane(0, 2, 2), HalfPlane(1, 0, 1)}};
    REQUIRE(canonicalized(a).constraints == canonicalized(b).constraints);
    REQUIRE(same_region(a, b));
}
