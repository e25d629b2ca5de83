#include <catch2/catch_amalgamated.hpp>

#include "quintic/newton_polygon.hpp"

using namespace quintic;

TEST_CASE("eisenstein polynomials have one steep segment", "[newton]") {
    auto np = newton_polygon(parse_poly("x^5 - 11"), 11);
    REQUIRE(np.zero_roots == 0);
    REQUIRE(np.segments == std::vector<NewtonSegment>{{Rat(1, 5), 5}});

    auto np5 = newton_polygon(parse_poly("x^5 + 5*x^4 - 5"), 5);
    REQUIRE(np5.segments == std::vector<NewtonSegment>{{Rat(1, 5), 5}});
}

TEST_CASE("unit coefficients give one flat segment", "[newton]") {
    auto np = newton_polygon(parse_poly("x^5 - 11"), 5);
    REQUIRE(np.segments == std::vector<NewtonSegment>{{Rat(0), 5}});
    auto np2 = newton_polygon(parse_poly("x^5 - x - 1"), 7);
    REQUIRE(np2.segments == std::vector<NewtonSegment>{{Rat(0), 5}});
}

TEST_CASE("segments list root valuations in ascending order", "[newton]") {
    // roots 5 and 25: valuations 1 and 2
    auto np = newton_polygon(parse_poly("x^2 - 30*x + 125"), 5);
    REQUIRE(np.segments == std::vector<NewtonSegment>{{Rat(1), 1}, {Rat(2), 1}});

    // roots 1 and 5: valuations 0 and 1
    auto np2 = newton_polygon(parse_poly("x^2 - 6*x + 5"), 5);
    REQUIRE(np2.segments == std::vector<NewtonSegment>{{Rat(0), 1}, {Rat(1), 1}});

    // roots 1, 5, 25
    IntPoly f = parse_poly("x - 1") * parse_poly("x - 5") * parse_poly("x - 25");
    auto np3 = newton_polygon(f, 5);
    REQUIRE(np3.segments ==
            std::vector<NewtonSegment>{{Rat(0), 1}, {Rat(1), 1}, {Rat(2), 1}});
}

TEST_CASE("powers of x are split off as zero roots", "[newton]") {
    auto np = newton_polygon(parse_poly("x^4 - 5*x^3"), 5);
    REQUIRE(np.zero_roots == 3);
    REQUIRE(np.segments == std::vector<NewtonSegment>{{Rat(1), 1}});

    auto np2 = newton_polygon(parse_poly("x^3"), 7);
    REQUIRE(np2.zero_roots == 3);
    REQUIRE(np2.segments.empty());
}

TEST_CASE("segment lengths account for the whole degree", "[newton]") {
    Rng rng(kDefaultSeed ^ 0x221);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> c(6);
        for (auto& x : c) x = rng.below(200) - 100;
        if (c[0] == 0) c[0] = 1;
        while (c.back() == 0) c.back() = rng.below(200) - 100;
        IntPoly f(std::move(c));
        for (Int p : {Int(2), Int(5)}) {
            auto np = newton_polygon(f, p);
            REQUIRE(np.zero_roots == 0);
            long total = 0;
            for (auto& s : np.segments) total += s.length;
            REQUIRE(total == f.degree());
            for (size_t i = 1; i < np.segments.size(); ++i)
                REQUIRE(np.segments[i - 1].slope < np.segments[i].slope);
        }
    }
}

TEST_CASE("newton polygon input validation", "[newton]") {
    REQUIRE_THROWS_AS(newton_polygon(IntPoly(), 5), InvalidInputError);
    REQUIRE_THROWS_AS(newton_polygon(parse_poly("x"), 1), InvalidInputError);
}
