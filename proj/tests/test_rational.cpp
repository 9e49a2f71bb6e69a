#include <catch2/catch_amalgamated.hpp>

#include "qsmash/rational.hpp"

using namespace qsmash;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    Rat a = rat(2, 4);
    CHECK(a.get_num() == 1);
    CHECK(a.get_den() == 2);

    Rat b = rat(3, -6);
    CHECK(b.get_num() == -1);
    CHECK(b.get_den() == 2);

    Rat z = rat(0, 7);
    CHECK(z.get_num() == 0);
    CHECK(z.get_den() == 1);

    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse and print round trip") {
    CHECK(rat_str(rat_parse("3/4")) == "3/4");
    CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
    CHECK(rat_str(rat_parse("5")) == "5");
    CHECK(rat_parse("10/2") == rat(5));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(18, 3) == 816);
}

TEST_CASE("rng reproducibility") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform(-5, 5) == b.uniform(-5, 5));

    Rng c(7);
    for (int i = 0; i < 200; ++i) {
        long v = c.uniform(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}
