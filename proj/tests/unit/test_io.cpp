#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "pierce/counterexample.hpp"
#include "pierce/io.hpp"

using namespace pierce;

namespace {

const char* kF1File =
    "family demo\n"
    "region F1\n"
    "halfplane 1 0 1\n"
    "halfplane -1 0 1\n"
    "halfplane 0 1 0\n"
    "halfplane 0 -1 0\n"
    "end\n";

} // namespace

TEST_CASE("parsing the segment fixture") {
    const Family f = parse_family(kF1File);
    REQUIRE(f.name == "demo");
    REQUIRE(f.regions.size() == 1);
    REQUIRE(vertices(f.regions[0]) == std::vector<Point>{{-1, 0}, {1, 0}});
}

TEST_CASE("rational coefficients parse exactly") {
    const Family f = parse_family("family t\nregion R\nhalfplane 1 0 2/3\nend\n");
    REQUIRE(f.regions[0].constraints.size() == 1);
    REQUIRE(f.regions[0].constraints[0] == HalfPlane(1, 0, Rational(2, 3)));
    REQUIRE(contains(f.regions[0], {Rational(2, 3), 5}));
    REQUIRE_FALSE(contains(f.regions[0], {Rational(67, 100), 5}));
}

TEST_CASE("zero normals are parse errors with a line number") {
    try {
        parse_family("family t\nregion R\nhalfplane 0 0 1\nend\n");
        FAIL("expected PARSE_ERROR");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::parse_error);
        REQUIRE(e.line() == 3);
    }
}

TEST_CASE("malformed files are rejected") {
    REQUIRE_THROWS_AS(parse_family(""), Error);
    REQUIRE_THROWS_AS(parse_family("region R\nhalfplane 1 0 1\nend\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\nregion R\nend\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\nregion R\nhalfplane 1 0 1\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\nregion R\nhalfplane 1 0\nend\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\nregion R\nhalfplane 1 0 x\nend\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\nregion R\nhalfplane 1 0 1/0\nend\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\nbogus\n"), Error);
    REQUIRE_THROWS_AS(parse_family("family t\nregion R\nregion S\nend\nend\n"), Error);
}

TEST_CASE("duplicate labels are their own error") {
    try {
        parse_family("family t\nregion R\nhalfplane 1 0 1\nend\nregion R\nhalfplane 1 0 1\nend\n");
        FAIL("expected DUPLICATE_LABEL");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::duplicate_label);
    }
}

TEST_CASE("serialize-then-parse is the identity on canonical form") {
    const Family f = generate(7, SequenceConfig::defaults());
    const std::string text = serialize_family(f);
    const Family back = parse_family(text);
    REQUIRE(back.name == f.name);
    REQUIRE(back.regions.size() == f.regions.size());
    for (std::size_t i = 0; i < f.regions.size(); ++i) {
        REQUIRE(back.regions[i].label == f.regions[i].label);
        REQUIRE(same_region(back.regions[i], f.regions[i]));
    }
    // Idempotence: a second round-trip is byte-identical.
    REQUIRE(serialize_family(back) == text);

    const Family fixture = parse_family(kF1File);
    const std::string canon = serialize_family(fixture);
    REQUIRE(serialize_family(parse_family(canon)) == canon);
}

TEST_CASE("regions without constraints cannot be serialized") {
    const Family f{"t", {ConvexRegion{"whole-plane", {}}}};
    REQUIRE_THROWS_AS(serialize_family(f), Error);
}

TEST_CASE("points files") {
    std::istringstream in("0 5\n1/2 0\n\n-3/4 -10\n");
    const auto pts = parse_points(in);
    REQUIRE(pts == std::vector<Point>{{0, 5}, {Rational(1, 2), 0}, {Rational(-3, 4), -10}});

    std::istringstream bad("1 2 3\n");
    REQUIRE_THROWS_AS(parse_points(bad), Error);
    std::istringstream bad2("1 x\n");
    REQUIRE_THROWS_AS(parse_points(bad2), Error);
}

TEST_CASE("sequence table files validate like table configs") {
    std::istringstream in("1/2 -1\n2/3 -2\n3/4 -3\n");
    const SequenceConfig cfg = parse_sequence_table(in);
    REQUIRE(cfg.kind == SequenceConfig::Kind::table);
    REQUIRE(cfg.t_at(4) == Rational(2, 3));

    std::istringstream bad("1/2 -1\n1/3 -2\n"); // t decreasing
    REQUIRE_THROWS_AS(parse_sequence_table(bad), Error);
}
