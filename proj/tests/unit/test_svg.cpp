#include <catch2/catch_amalgamated.hpp>

#include "pierce/counterexample.hpp"
#include "pierce/svg.hpp"

using namespace pierce;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("render draws one region shape per family member") {
    const Family f = generate(6, SequenceConfig::defaults());
    const std::string svg = render_svg(f, -2, -3, 3, 4);
    REQUIRE(svg.rfind("<?xml", 0) == 0);
    REQUIRE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    REQUIRE(count_occurrences(svg, "class=\"region\"") == f.regions.size());
    REQUIRE(count_occurrences(svg, "</svg>") == 1);
}

TEST_CASE("rendering is byte-deterministic") {
    const Family f = generate(5, SequenceConfig::defaults());
    REQUIRE(render_svg(f, -2, -3, 3, 4) == render_svg(f, -2, -3, 3, 4));
}

TEST_CASE("regions outside the clip box still contribute an empty shape") {
    Family f{"far", {box_region("X", 100, 101, 100, 101)}};
    const std::string svg = render_svg(f, -2, -2, 2, 2);
    REQUIRE(count_occurrences(svg, "class=\"region\"") == 1);
    REQUIRE(svg.find("points=\"\"") != std::string::npos);
}

TEST_CASE("degenerate clip boxes are rejected") {
    const Family f = generate(3, SequenceConfig::defaults());
    REQUIRE_THROWS_AS(render_svg(f, 2, 0, -2, 1), Error);
    REQUIRE_THROWS_AS(render_svg(f, 0, 0, 0, 1), Error);
}
