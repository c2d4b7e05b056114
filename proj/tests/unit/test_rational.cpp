#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pierce/rational.hpp"

using namespace pierce;

TEST_CASE("rationals stay reduced with positive denominators") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> num(-500, 500);
    std::uniform_int_distribution<int> den(1, 120);
    for (int i = 0; i < 300; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        for (const Rational& v : {Rational(a + b), Rational(a - b), Rational(a * b)}) {
            REQUIRE(rational_den(v) > 0);
            REQUIRE(boost::multiprecision::gcd(abs(rational_num(v)), rational_den(v)) == 1);
        }
        if (b != 0) REQUIRE((a / b) * b == a);
        REQUIRE((a + b) - b == a);
    }
}

TEST_CASE("no rounding pathway exists") {
    // 1/3 + 1/6 = 1/2 exactly, and so on for awkward denominators.
    REQUIRE(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    Rational sum(0);
    for (int k = 1; k <= 50; ++k) sum += Rational(1, k);
    Rational sum_reversed(0);
    for (int k = 50; k >= 1; --k) sum_reversed += Rational(1, k);
    REQUIRE(sum == sum_reversed);
}

TEST_CASE("rational parsing and printing round-trips") {
    REQUIRE(parse_rational("2/3") == Rational(2, 3));
    REQUIRE(parse_rational("-22/7") == Rational(-22, 7));
    REQUIRE(parse_rational("5") == Rational(5));
    REQUIRE(parse_rational("-0") == Rational(0));
    REQUIRE(parse_rational("4/6") == Rational(2, 3)); // reduced on input
    REQUIRE(to_string(Rational(-3, 4)) == "-3/4");
    REQUIRE(to_string(Rational(7)) == "7");
    REQUIRE(to_string(parse_rational("100/25")) == "4");

    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "2 3", "--1"})
        REQUIRE_THROWS_AS(parse_rational(bad), Error);
}

TEST_CASE("rational floor") {
    REQUIRE(rational_floor(Rational(7, 2)) == 3);
    REQUIRE(rational_floor(Rational(-7, 2)) == -4);
    REQUIRE(rational_floor(Rational(6)) == 6);
    REQUIRE(rational_floor(Rational(-6)) == -6);
    REQUIRE(rational_floor(Rational(0)) == 0);
}
