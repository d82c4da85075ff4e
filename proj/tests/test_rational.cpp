#include <catch2/catch.hpp>

#include <latmat/rational.hpp>

using namespace latmat;

TEST_CASE("rational parsing and rendering") {
    REQUIRE(rat_from_string("3/6") == Rat(1, 2));
    REQUIRE(rat_from_string("-4/8") == Rat(-1, 2));
    REQUIRE(rat_to_string(rat_from_string("-4/8")) == "-1/2");
    REQUIRE(rat_from_string("7") == 7);
    REQUIRE(rat_to_string(Rat(0)) == "0");
    REQUIRE_THROWS_AS(rat_from_string(""), ParseError);
    REQUIRE_THROWS_AS(rat_from_string("1/0"), ParseError);
    REQUIRE_THROWS_AS(rat_from_string("abc"), ParseError);
    REQUIRE_THROWS_AS(int_from_string("12x"), ParseError);
    REQUIRE(int_from_string("227700") == 227700);
}

TEST_CASE("rational inverse") {
    REQUIRE(rat_inverse(Rat(-2, 3)) == Rat(-3, 2));
    REQUIRE_THROWS_AS(rat_inverse(Rat(0)), ZeroValueError);
}

TEST_CASE("gcd, lcm, divisibility") {
    REQUIRE(int_gcd(36, 230) == 2);
    REQUIRE(int_lcm(36, 230) == 4140);
    REQUIRE(divides(Int(5), Int(227700)));
    REQUIRE(!divides(Int(7), Int(227700)));
}

TEST_CASE("factorization") {
    REQUIRE(factorize(1).empty());
    Factorization f = factorize(227700);
    Factorization expected = {{2, 2}, {3, 2}, {5, 2}, {11, 1}, {23, 1}};
    REQUIRE(f == expected);
    REQUIRE(factorize(97) == Factorization{{97, 1}});
    REQUIRE_THROWS_AS(factorize(0), NonPositiveError);
}

TEST_CASE("random stream is deterministic and in range") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t va = a.below(37);
        REQUIRE(va == b.below(37));
        REQUIRE(va < 37);
    }
    Rng c(1);
    for (int i = 0; i < 100; ++i) {
        long v = c.range(-5, 5);
        REQUIRE(v >= -5);
        REQUIRE(v <= 5);
        REQUIRE(c.nonzero_rational() != 0);
    }
    REQUIRE_THROWS_AS(c.below(0), SizeError);
}
