#include <catch2/catch_amalgamated.hpp>

#include "quintic/densities.hpp"

using namespace quintic;

TEST_CASE("certified intervals round only when the rounding is settled", "[densities]") {
    CertifiedValue v;
    v.partial = Rat(1);
    v.tail_low = Rat(72, 100);
    v.tail_high = Rat(74, 100);
    REQUIRE(v.lo() == Rat(72, 100));
    REQUIRE(v.hi() == Rat(74, 100));
    REQUIRE(v.width() == Rat(2, 100));
    REQUIRE(v.rounds_unambiguously(1));
    REQUIRE(v.rounded(1) == Rat(7, 10));

    // the interval straddles 0.45, so the endpoints round apart at 1 digit
    CertifiedValue w;
    w.tail_low = Rat(4499, 10000);
    w.tail_high = Rat(4501, 10000);
    REQUIRE_FALSE(w.rounds_unambiguously(1));
    REQUIRE_THROWS_AS(w.rounded(1), PrecisionError);
}

TEST_CASE("density of genus one", "[densities]") {
    auto v = genus_one_density(695);
    REQUIRE(v.method == "genus-one");
    REQUIRE(v.cutoff == 695);
    REQUIRE(v.width() < Rat(1, Int(1000000000)));
    REQUIRE(v.rounded(6) == Rat(999935, 1000000));
    REQUIRE(v.hi() < 1);

    auto w = genus_one_density_digits(6);
    REQUIRE(w.rounded(6) == Rat(999935, 1000000));
    auto w8 = genus_one_density_digits(8);
    REQUIRE(w8.rounded(8) == Rat(99993492, 100000000));
    // the coarse interval contains the sharp one
    REQUIRE(v.lo() <= w8.lo());
    REQUIRE(w8.hi() <= v.hi());
}

TEST_CASE("average genus number sits just above one", "[densities]") {
    auto v = average_genus_number_digits(5);
    REQUIRE(v.method == "average");
    REQUIRE(v.lo() > 1);
    REQUIRE(v.rounded(5) == Rat(100026, 100000));
}

TEST_CASE("forced-prime lower bounds shrink geometrically", "[densities]") {
    // k = 0 forces nothing: identical accumulation to the genus-one density
    auto base = genus_one_density(500);
    auto k0 = genus_power_lower_bound(0, 500);
    REQUIRE(k0.partial == base.partial);
    REQUIRE(k0.lo() == base.lo());
    REQUIRE(k0.hi() == base.hi());

    auto k1 = genus_power_lower_bound(1, 500);
    REQUIRE(k1.lo() > Rat(615, 10000000));
    REQUIRE(k1.hi() < Rat(617, 10000000));

    auto k2 = genus_power_lower_bound(2, 500);
    REQUIRE(k2.lo() > 0);
    REQUIRE(k2.hi() < k1.lo());
}

TEST_CASE("field-count constants share their euler factors", "[densities]") {
    auto c0 = field_count_constant(0, 2000);
    auto c1 = field_count_constant(1, 2000);
    auto c2 = field_count_constant(2, 2000);
    // prefactors 1/240, 1/24, 1/16 against identical products
    REQUIRE(c1.partial == 10 * c0.partial);
    REQUIRE(c2.partial == 15 * c0.partial);

    auto v = field_count_constant(0, 10000);
    REQUIRE(v.width() < Rat(1, 1000000));
    REQUIRE(v.rounded(5) == Rat(576, 100000));
}

TEST_CASE("truncated sieve brackets the euler product", "[densities]") {
    auto s2 = truncated_sieve_sum(100);
    auto s3 = truncated_sieve_sum(1000);
    REQUIRE(s3.method == "sieve");
    REQUIRE(s3.width() < Rat(7, Int("10000000000")));
    // the nominal value sits at the interval center
    Rat center3 = (s3.lo() + s3.hi()) / 2;
    REQUIRE(center3 > Rat(9999349196, Int("10000000000")));
    REQUIRE(center3 < Rat(9999349197, Int("10000000000")));
    // deeper truncations stay inside shallower intervals
    REQUIRE(s2.lo() <= center3);
    REQUIRE(center3 <= s2.hi());

    // independent agreement with the euler-product evaluation
    auto euler = genus_one_density(695);
    Rat lo = std::max(euler.lo(), s3.lo());
    Rat hi = std::min(euler.hi(), s3.hi());
    REQUIRE(lo <= hi);
}

TEST_CASE("screen density is strictly positive and tiny", "[densities]") {
    auto v = screen_density(500);
    REQUIRE(v.method == "screen");
    REQUIRE(v.lo() > 0);
    REQUIRE(v.lo() > Rat(4, 1000000));
    REQUIRE(v.hi() < Rat(5, 1000000));
}

TEST_CASE("parameter validation", "[densities]") {
    REQUIRE_THROWS_AS(genus_one_density(10), InvalidInputError);
    REQUIRE_THROWS_AS(average_genus_number(7), InvalidInputError);
    REQUIRE_THROWS_AS(genus_power_lower_bound(21, 100), InvalidInputError);
    REQUIRE_THROWS_AS(genus_power_lower_bound(-1, 100), InvalidInputError);
    REQUIRE_THROWS_AS(field_count_constant(3, 100), InvalidInputError);
    REQUIRE_THROWS_AS(field_count_constant(0, 5), InvalidInputError);
    REQUIRE_THROWS_AS(truncated_sieve_sum(4), InvalidInputError);
    REQUIRE_THROWS_AS(genus_one_density_digits(0), InvalidInputError);
    REQUIRE_THROWS_AS(genus_one_density_digits(13), InvalidInputError);
    REQUIRE_THROWS_AS(field_count_constant_digits(0, 8), InvalidInputError);
}
