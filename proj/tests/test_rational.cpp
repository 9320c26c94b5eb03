#include "tc/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using tc::Rat;

TEST_CASE("canonical form") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, -7) == Rat(0));
    CHECK(Rat(6, 3).is_integer());
    CHECK(Rat(6, 3).den() == 1);
}

TEST_CASE("arithmetic stays exact") {
    Rat third(1, 3);
    CHECK(third + third + third == Rat(1));
    CHECK(Rat(1, 6) + Rat(1, 10) == Rat(4, 15));
    CHECK(Rat(7, 2) * Rat(2, 7) == Rat(1));
    CHECK(Rat(1) / Rat(3) == third);
    CHECK(-Rat(5, 3) + Rat(5, 3) == Rat(0));
    CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("ordering") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(10, 20) <= Rat(1, 2));
    CHECK(tc::max(Rat(3, 7), Rat(2, 5)) == Rat(3, 7));
}

TEST_CASE("string round trip in lowest terms") {
    CHECK(Rat(4, 6).str() == "2/3");
    CHECK(Rat(-4, 6).str() == "-2/3");
    CHECK(Rat(5).str() == "5");
    CHECK(Rat::parse("2/3") == Rat(2, 3));
    CHECK(Rat::parse("-14/21") == Rat(-2, 3));
    CHECK(Rat::parse("42") == Rat(42));

    // big values survive the trip
    Rat big = Rat::parse("123456789123456789123456789/987654321987654321");
    CHECK(Rat::parse(big.str()) == big);
    CHECK_THROWS(Rat::parse("1/0"));
}

TEST_CASE("half powers") {
    CHECK(tc::half_pow(0) == Rat(1));
    CHECK(tc::half_pow(3) == Rat(1, 8));
    CHECK(tc::half_pow(20) * Rat(1 << 20) == Rat(1));
}
