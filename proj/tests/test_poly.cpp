#include <catch2/catch_amalgamated.hpp>

#include "quintic/poly.hpp"

using namespace quintic;

namespace {

// independent resultant oracle: Sylvester matrix determinant over exact rationals
Int sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    long m = a.degree(), n = b.degree();
    long N = m + n;
    if (N == 0) return 1;
    std::vector<std::vector<Rat>> M(static_cast<size_t>(N), std::vector<Rat>(static_cast<size_t>(N), Rat(0)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j)
            M[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = Rat(a.coeff(m - j));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j)
            M[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = Rat(b.coeff(n - j));
    Rat det = 1;
    for (long c = 0; c < N; ++c) {
        long piv = -1;
        for (long r = c; r < N; ++r)
            if (M[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(c)]);
            det = -det;
        }
        Rat pv = M[static_cast<size_t>(c)][static_cast<size_t>(c)];
        det *= pv;
        for (long r = c + 1; r < N; ++r) {
            Rat f = M[static_cast<size_t>(r)][static_cast<size_t>(c)] / pv;
            if (f == 0) continue;
            for (long k = c; k < N; ++k)
                M[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * M[static_cast<size_t>(c)][static_cast<size_t>(k)];
        }
    }
    Int num = boost::multiprecision::numerator(det);
    Int den = boost::multiprecision::denominator(det);
    REQUIRE(den == 1);
    return num;
}

IntPoly random_poly(Rng& rng, long deg) {
    std::vector<Int> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = rng.below(19) - 9;
    while (c.back() == 0) c.back() = rng.below(19) - 9;
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("expression parser round trips through printer", "[poly]") {
    IntPoly f = parse_poly("x^5 - 2*x + 7");
    REQUIRE(f.c == std::vector<Int>{7, -2, 0, 0, 0, 1});
    REQUIRE(poly_to_string(f) == "x^5 - 2*x + 7");
    REQUIRE(parse_poly(poly_to_string(f)) == f);

    IntPoly g = parse_poly("-3*x^2 + x - 1");
    REQUIRE(poly_to_string(g) == "-3*x^2 + x - 1");
    REQUIRE(parse_poly(poly_to_string(g)) == g);
}

TEST_CASE("csv parser accepts constant-first coefficient lists", "[poly]") {
    IntPoly f = parse_poly("-31,0,0,0,0,1");
    REQUIRE(f == parse_poly("x^5 - 31"));
    REQUIRE(poly_to_csv(f) == "-31,0,0,0,0,1");
    REQUIRE(parse_poly(poly_to_csv(f)) == f);
}

TEST_CASE("parser rejects malformed input", "[poly]") {
    REQUIRE_THROWS_AS(parse_poly(""), InvalidInputError);
    REQUIRE_THROWS_AS(parse_poly("  "), InvalidInputError);
    REQUIRE_THROWS_AS(parse_poly("1,,2"), InvalidInputError);
    REQUIRE_THROWS_AS(parse_poly("x^5 + 2z"), InvalidInputError);
    REQUIRE_THROWS_AS(parse_poly("*x"), InvalidInputError);
    REQUIRE_THROWS_AS(parse_poly("x^"), InvalidInputError);
    REQUIRE_THROWS_AS(parse_poly("x^99"), InvalidInputError);
}

TEST_CASE("ring operations satisfy basic identities", "[poly]") {
    IntPoly x = IntPoly::x();
    IntPoly f = (x + IntPoly::constant(1)) * (x - IntPoly::constant(1));
    REQUIRE(f == parse_poly("x^2 - 1"));
    REQUIRE(f.eval(Int(3)) == 8);
    REQUIRE(f.eval(Rat(1, 2)) == Rat(-3, 4));

    IntPoly sq = parse_poly("x^2");
    REQUIRE(sq.shift(1) == parse_poly("x^2 + 2*x + 1"));
    REQUIRE(parse_poly("x^3 - x").shift(-2) == parse_poly("x^3 - 6*x^2 + 11*x - 6"));
    REQUIRE(parse_poly("x^2 + x").scale_arg(3) == parse_poly("9*x^2 + 3*x"));

    REQUIRE(parse_poly("x^5 - 2*x + 7").derivative() == parse_poly("5*x^4 - 2"));
    REQUIRE(parse_poly("6*x^2 - 10*x + 4").content() == 2);
    // primitive_part normalizes the leading coefficient to be positive
    REQUIRE(parse_poly("-6*x^2 + 10*x - 4").primitive_part() == parse_poly("3*x^2 - 5*x + 2"));
}

TEST_CASE("shift is evaluation at a translated argument", "[poly]") {
    Rng rng(kDefaultSeed);
    for (int trial = 0; trial < 20; ++trial) {
        IntPoly f = random_poly(rng, 1 + static_cast<long>(rng.below(5).convert_to<long>()));
        Int a = rng.below(11) - 5;
        Int x0 = rng.below(11) - 5;
        REQUIRE(f.shift(a).eval(x0) == f.eval(x0 + a));
    }
}

TEST_CASE("subresultant resultant matches the Sylvester determinant", "[poly]") {
    Rng rng(kDefaultSeed ^ 0x1234);
    for (int trial = 0; trial < 30; ++trial) {
        IntPoly a = random_poly(rng, 2 + static_cast<long>(rng.below(3).convert_to<long>()));
        IntPoly b = random_poly(rng, 1 + static_cast<long>(rng.below(3).convert_to<long>()));
        REQUIRE(resultant(a, b) == sylvester_resultant(a, b));
    }
}

TEST_CASE("frozen discriminants", "[poly]") {
    REQUIRE(discriminant(parse_poly("x^5 - x - 1")) == 2869);
    REQUIRE(Int(2869) == Int(19) * 151);
    REQUIRE(discriminant(parse_poly("x^5 - 11")) == 45753125);
    REQUIRE(Int(45753125) == pow_int(5, 5) * pow_int(11, 4));
    REQUIRE(discriminant(parse_poly("x^2 - 1")) == 4);
    REQUIRE(discriminant(parse_poly("x^2 + x + 1")) == -3);
    // conductor 11 cyclic quintic has discriminant 11^4
    REQUIRE(discriminant(parse_poly("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1")) == 14641);
}

TEST_CASE("trinomial discriminant identity 256 a^5 + 3125 b^4", "[poly]") {
    Rng rng(kDefaultSeed ^ 0x77);
    for (int trial = 0; trial < 25; ++trial) {
        Int a = rng.below(21) - 10;
        Int b = rng.below(21) - 10;
        IntPoly f({b, a, 0, 0, 0, 1});
        REQUIRE(discriminant(f) == 256 * pow_int(a, 5) + 3125 * pow_int(b, 4));
    }
}

TEST_CASE("discriminant vanishes exactly on repeated roots", "[poly]") {
    IntPoly rep = parse_poly("x - 1") * parse_poly("x - 1") * parse_poly("x + 2");
    REQUIRE(discriminant(rep) == 0);
    REQUIRE(resultant(parse_poly("x^2 - 1"), parse_poly("x - 1")) == 0);
    REQUIRE_THROWS_AS(discriminant(IntPoly::constant(3)), InvalidInputError);
}

TEST_CASE("discriminant is invariant under integer shifts", "[poly]") {
    Rng rng(kDefaultSeed ^ 0xabc);
    for (int trial = 0; trial < 10; ++trial) {
        IntPoly f = random_poly(rng, 4);
        Int a = rng.below(9) - 4;
        if (discriminant(f) == 0) continue;
        REQUIRE(discriminant(f.shift(a)) == discriminant(f));
    }
}
