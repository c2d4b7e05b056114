#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pierce/radon.hpp"
#include "support/oracles.hpp"

using namespace pierce;

namespace {

void check_valid(const std::array<Point, 4>& pts, const RadonPartition& rp) {
    REQUIRE(rp.part_a.size() + rp.part_b.size() == 4);
    REQUIRE_FALSE(rp.part_a.empty());
    REQUIRE_FALSE(rp.part_b.empty());
    std::vector<Point> pa, pb;
    for (int i : rp.part_a) pa.push_back(pts[static_cast<std::size_t>(i - 1)]);
    for (int i : rp.part_b) pb.push_back(pts[static_cast<std::size_t>(i - 1)]);
    REQUIRE(oracle::in_hull_3(rp.common_point, pa));
    REQUIRE(oracle::in_hull_3(rp.common_point, pb));
}

} // namespace

TEST_CASE("square corners split along the diagonals") {
    const std::array<Point, 4> pts = {Point{0, 0}, Point{2, 0}, Point{0, 2}, Point{2, 2}};
    const RadonPartition rp = radon_partition(pts);
    REQUIRE(rp.part_a == std::vector<int>{1, 4});
    REQUIRE(rp.part_b == std::vector<int>{2, 3});
    REQUIRE(rp.common_point == Point{1, 1});
    check_valid(pts, rp);
}

TEST_CASE("an interior point forms a singleton part") {
    const std::array<Point, 4> pts = {Point{0, 0}, Point{3, 0}, Point{0, 3}, Point{1, 1}};
    const RadonPartition rp = radon_partition(pts);
    REQUIRE(rp.part_a == std::vector<int>{4});
    REQUIRE(rp.part_b == std::vector<int>{1, 2, 3});
    REQUIRE(rp.common_point == Point{1, 1});
    check_valid(pts, rp);
}

TEST_CASE("collinear input resolves to the canonically smallest valid bipartition") {
    const std::array<Point, 4> pts = {Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}};
    const RadonPartition rp = radon_partition(pts);
    check_valid(pts, rp);
    // {1} vs {2,3,4} fails ((0,0) is outside [1,3]x{0}), {2} vs {1,3,4} works.
    REQUIRE(rp.part_a == std::vector<int>{2});
    REQUIRE(rp.common_point == Point{1, 0});
}

TEST_CASE("coincident points are handled") {
    const std::array<Point, 4> pts = {Point{1, 1}, Point{1, 1}, Point{5, 0}, Point{0, 5}};
    check_valid(pts, radon_partition(pts));
    const std::array<Point, 4> same = {Point{2, 2}, Point{2, 2}, Point{2, 2}, Point{2, 2}};
    check_valid(same, radon_partition(same));
}

TEST_CASE("random quadruples match the bipartition oracle") {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<int> num(-16, 16);
    std::uniform_int_distribution<int> den(1, 4);
    for (int round = 0; round < 300; ++round) {
        std::array<Point, 4> pts;
        for (auto& p : pts)
            p = Point{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        if (round % 10 == 3) { // force collinear
            const Rational slope(num(rng), 7);
            for (int i = 0; i < 4; ++i) {
                const Rational x(num(rng), den(rng));
                pts[static_cast<std::size_t>(i)] = Point{x, slope * x};
            }
        }
        if (round % 7 == 2) pts[3] = pts[0]; // force duplicates

        const RadonPartition rp = radon_partition(pts);
        check_valid(pts, rp);
        const auto valid = oracle::radon_bipartitions(pts);
        REQUIRE_FALSE(valid.empty());
        // The implementation returns the canonically smallest valid part_a.
        REQUIRE(rp.part_a == valid.front());
    }
}
