#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicrev/rational.hpp"
#include "cubicrev/rng.hpp"

using namespace cubicrev;

TEST_CASE("construction normalizes to canonical form") {
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(3, -6) == BigRational(-1, 2));
    BigRational zero(0, 7);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
    CHECK_THROWS_AS(BigRational(1, 0), std::invalid_argument);
}

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(BigRational(9, 4)) == BigRational(3, 2));
    CHECK(!exact_sqrt(BigRational(7)));
    CHECK(*exact_sqrt(BigRational(0)) == BigRational(0));
    CHECK(!exact_sqrt(BigRational(2, 9)));
    CHECK_THROWS_AS(exact_sqrt(BigRational(-1)), std::domain_error);
}

TEST_CASE("string round trips") {
    CHECK(BigRational::from_string("3/4") == BigRational(3, 4));
    CHECK(BigRational::from_string("-6/8") == BigRational(-3, 4));
    CHECK(BigRational::from_string("12") == BigRational(12));
    CHECK(BigRational::from_string("-1.25") == BigRational(-5, 4));
    CHECK(BigRational::from_string("0.5") == BigRational(1, 2));
    CHECK(BigRational(22, 7).to_string() == "22/7");
    CHECK(BigRational(-5).to_string() == "-5");

    CHECK_THROWS_AS(BigRational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::from_string("1//2"), std::invalid_argument);

    DetRng rng(7);
    for (int i = 0; i < 500; ++i) {
        BigRational q(rng.uniform_int(-1000000, 1000000), rng.uniform_int(1, 1000000));
        CHECK(BigRational::from_string(q.to_string()) == q);
    }
}

TEST_CASE("operations keep values canonical") {
    DetRng rng(11);
    auto random_q = [&] {
        return BigRational(rng.uniform_int(-500, 500), rng.uniform_int(1, 500));
    };
    for (int i = 0; i < 500; ++i) {
        BigRational a = random_q(), b = random_q();
        CHECK((a + b).is_canonical());
        CHECK((a - b).is_canonical());
        CHECK((a * b).is_canonical());
        if (!b.is_zero()) CHECK((a / b).is_canonical());
    }
}

TEST_CASE("field axioms on random triples") {
    DetRng rng(13);
    auto random_q = [&] {
        return BigRational(rng.uniform_int(-60, 60), rng.uniform_int(1, 60));
    };
    for (int i = 0; i < 300; ++i) {
        BigRational a = random_q(), b = random_q(), c = random_q();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == BigRational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == BigRational(1));
    }
}

TEST_CASE("comparison agrees with cross multiplication") {
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-1, 2) < BigRational(-1, 3));
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(7, 5) > BigRational(4, 3));  // 21 > 20
}

TEST_CASE("height") {
    CHECK(rational_height(BigRational(18, 7)) == 18);
    CHECK(rational_height(BigRational(3, 14)) == 14);
    CHECK(rational_height(BigRational(0)) == 1);
    CHECK(rational_height(BigRational(-5)) == 5);
}
