#include <catch2/catch_amalgamated.hpp>

#include "quintic/eisenstein.hpp"

using namespace quintic;

TEST_CASE("eisenstein recognition", "[eisenstein]") {
    REQUIRE(is_eisenstein_at(parse_poly("x^5 - 2"), 2));
    REQUIRE_FALSE(is_eisenstein_at(parse_poly("x^5 - 2"), 3));
    REQUIRE_FALSE(is_eisenstein_at(parse_poly("x^5 - 4"), 2));
    REQUIRE(is_eisenstein_at(parse_poly("x^5 + 5*x^4 - 5"), 5));
    REQUIRE(is_eisenstein_at(parse_poly("x^2 - 6*x + 3"), 3));
    REQUIRE_FALSE(is_eisenstein_at(parse_poly("x^5 - 11"), 5));
}

TEST_CASE("congruence condition on eisenstein generators", "[eisenstein]") {
    // all coefficients below x^4 vanish mod 25 and a4 + a0 does as well
    REQUIRE(star_condition(parse_poly("x^5 + 5*x^4 - 5")));
    REQUIRE_FALSE(star_condition(parse_poly("x^5 - 5")));
    REQUIRE_FALSE(star_condition(parse_poly("x^5 + 5*x^4 + 10*x^3 + 10*x^2 + 5*x - 10")));

    // the five galois classes all satisfy it
    for (const char* s : {"x^5 + 5*x^4 - 55", "x^5 + 5*x^4 - 30", "x^5 + 5*x^4 - 5",
                          "x^5 + 5*x^4 + 20", "x^5 + 5*x^4 + 45"})
        REQUIRE(star_condition(parse_poly(s)));

    REQUIRE_THROWS_AS(star_condition(parse_poly("x^5 - 1")), InvalidInputError);
    REQUIRE_THROWS_AS(star_condition(parse_poly("x^2 - 5")), InvalidInputError);
}

TEST_CASE("already-eisenstein inputs come back unchanged", "[eisenstein]") {
    REQUIRE(eisenstein_generator_at_5(parse_poly("x^5 - 5")) == parse_poly("x^5 - 5"));
    REQUIRE(eisenstein_generator_at_5(parse_poly("x^5 + 5*x^4 - 5")) ==
            parse_poly("x^5 + 5*x^4 - 5"));
}

TEST_CASE("a unit translate reduces to an eisenstein generator", "[eisenstein]") {
    REQUIRE(eisenstein_generator_at_5(parse_poly("x^5 - 11")) ==
            parse_poly("x^5 + 5*x^4 + 10*x^3 + 10*x^2 + 5*x - 10"));
}

TEST_CASE("valuation-two constant term goes through the power trick", "[eisenstein]") {
    // (x-1)^5 - 25: the shifted constant has valuation 2, so a cube of the
    // uniformizer is needed before rescaling
    IntPoly f = parse_poly("x^5 - 5*x^4 + 10*x^3 - 10*x^2 + 5*x - 26");
    REQUIRE(f == parse_poly("x - 1") * parse_poly("x - 1") * parse_poly("x - 1") *
                     parse_poly("x - 1") * parse_poly("x - 1") - IntPoly::constant(25));
    REQUIRE(eisenstein_generator_at_5(f) == parse_poly("x^5 - 5"));
}

TEST_CASE("center refinement digs below the first residue digit", "[eisenstein]") {
    // (x-6)^5 - 15625: centering at 1 leaves constant valuation 5, so the
    // center must be refined to 6 before the valuation becomes coprime to 5
    IntPoly f = parse_poly("x^5 - 30*x^4 + 360*x^3 - 2160*x^2 + 6480*x - 23401");
    REQUIRE(eisenstein_generator_at_5(f) == parse_poly("x^5 - 5"));
}

TEST_CASE("generator outputs are eisenstein and congruence class is stable under shifts",
          "[eisenstein]") {
    IntPoly base = parse_poly("x^5 - 11");
    for (Int c = -2; c <= 2; ++c) {
        IntPoly g = eisenstein_generator_at_5(base.shift(c));
        REQUIRE(is_eisenstein_at(g, 5));
        REQUIRE_FALSE(star_condition(g));
    }
    IntPoly starred = parse_poly("x^5 + 5*x^4 - 5");
    for (Int c = -2; c <= 2; ++c) {
        IntPoly g = eisenstein_generator_at_5(starred.shift(c));
        REQUIRE(is_eisenstein_at(g, 5));
        REQUIRE(star_condition(g));
    }
}

TEST_CASE("generator construction rejects unsuitable input", "[eisenstein]") {
    REQUIRE_THROWS_AS(eisenstein_generator_at_5(parse_poly("x^5 - x - 1")), InvalidInputError);
    REQUIRE_THROWS_AS(eisenstein_generator_at_5(parse_poly("x^2 - 5")), InvalidInputError);
    REQUIRE_THROWS_AS(eisenstein_generator_at_5(parse_poly("2*x^5 - 5")), InvalidInputError);
}
