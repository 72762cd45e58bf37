#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "wittkernel/rational.hpp"

using namespace wk;

TEST_CASE("factorize basics") {
    CHECK(factorize(12) == std::vector<int64_t>{2, 2, 3});
    CHECK(factorize(1).empty());
    // 9991 splits below its square root
    CHECK(factorize(9991) == std::vector<int64_t>{97, 103});
    CHECK_THROWS_AS(factorize(0), DomainError);
    CHECK_THROWS_AS(factorize(-5), DomainError);
}

TEST_CASE("factorize recomposes") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        int64_t n = static_cast<int64_t>(rng() % 2000000) + 1;
        int64_t prod = 1;
        int64_t prev = 1;
        for (int64_t p : factorize(n)) {
            CHECK(is_prime(p));
            CHECK(p >= prev);
            prev = p;
            prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("rational normal form") {
    Rational r(8, -27);
    CHECK(r.num() == -8);
    CHECK(r.den() == 27);
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK((Rational(1, 3) / Rational(2)).to_string() == "1/6");
}

TEST_CASE("square classes") {
    CHECK(SquareClass::of(18).value() == 2);
    CHECK(SquareClass::of(-4).value() == -1);
    // (8/27)/6 = 4/81 = (2/9)^2
    Rational r(8, 27);
    SquareClass s = SquareClass::of(r);
    CHECK(s.value() == 6);
    Rational ratio = r / Rational(6);
    CHECK(ratio == Rational(4, 81));
    CHECK(SquareClass::of(1).is_one());
    CHECK_THROWS_AS(SquareClass::of(0), DomainError);
}

TEST_CASE("square class is a square-invariant and idempotent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        int64_t n = static_cast<int64_t>(rng() % 400) - 200;
        int64_t d = static_cast<int64_t>(rng() % 200) + 1;
        if (n == 0) continue;
        Rational r(n, d);
        int64_t tn = static_cast<int64_t>(rng() % 20) + 1;
        int64_t td = static_cast<int64_t>(rng() % 20) + 1;
        Rational t(tn, td);
        SquareClass s = SquareClass::of(r);
        CHECK(SquareClass::of(r * t * t) == s);
        CHECK(SquareClass::of(Rational(s.value())) == s);
        // r / value is a square: its class is 1
        CHECK(SquareClass::of(r / Rational(s.value())).is_one());
    }
}

TEST_CASE("local squares: frozen examples") {
    CHECK(is_local_square(Rational(2), PlaceQ::real()));
    // 17 = 1 mod 8; the residue search mod 2^6 finds 9^2 = 81 = 17 + 64
    CHECK(is_local_square(Rational(17), PlaceQ::prime(2)));
    // 3^2 = 2 mod 7
    CHECK(is_local_square(Rational(2), PlaceQ::prime(7)));
    CHECK_FALSE(is_local_square(Rational(-2), PlaceQ::real()));
    CHECK_FALSE(is_local_square(Rational(2), PlaceQ::prime(5)));
    CHECK_THROWS_AS(is_local_square(Rational(0), PlaceQ::real()), DomainError);
}

TEST_CASE("local squares agree with the residue search") {
    std::vector<PlaceQ> places{PlaceQ::real()};
    for (int64_t p : {2, 3, 5, 7, 11, 13}) places.push_back(PlaceQ::prime(p));
    for (int64_t n = -60; n <= 60; ++n) {
        if (n == 0) continue;
        for (int64_t d : {1, 2, 3, 4, 9}) {
            Rational r(n, d);
            for (const PlaceQ& v : places)
                CHECK(is_local_square(r, v) == testing::local_square_search(r, v));
        }
    }
}

TEST_CASE("local square test is square-invariant") {
    std::mt19937_64 rng(13);
    std::vector<PlaceQ> places{PlaceQ::real(), PlaceQ::prime(2), PlaceQ::prime(3),
                               PlaceQ::prime(7), PlaceQ::prime(11)};
    for (int i = 0; i < 200; ++i) {
        int64_t n = static_cast<int64_t>(rng() % 400) - 200;
        if (n == 0) continue;
        Rational r(n, static_cast<int64_t>(rng() % 60) + 1);
        Rational t(static_cast<int64_t>(rng() % 15) + 1, static_cast<int64_t>(rng() % 15) + 1);
        for (const PlaceQ& v : places)
            CHECK(is_local_square(r, v) == is_local_square(r * t * t, v));
    }
}

TEST_CASE("square everywhere relevant means square") {
    // exhaustively over |num|, |den| <= 100
    for (int64_t n = -100; n <= 100; ++n) {
        if (n == 0) continue;
        for (int64_t d = 1; d <= 100; ++d) {
            Rational r(n, d);
            SquareClass cls = SquareClass::of(r);
            std::vector<PlaceQ> places{PlaceQ::real(), PlaceQ::prime(2)};
            for (int64_t p : cls.primes())
                if (p != 2) places.push_back(PlaceQ::prime(p));
            bool everywhere = true;
            for (const PlaceQ& v : places) everywhere = everywhere && is_local_square(r, v);
            CHECK(everywhere == cls.is_one());
        }
    }
}

TEST_CASE("places order and parse round trip") {
    CHECK(PlaceQ::prime(2) < PlaceQ::prime(3));
    CHECK(PlaceQ::prime(97) < PlaceQ::real());
    CHECK_FALSE(PlaceQ::real() < PlaceQ::prime(2));
    CHECK(PlaceQ::real().to_string() == "inf");
    CHECK(PlaceQ::prime(13).to_string() == "13");
    CHECK_THROWS_AS(PlaceQ::prime(9), DomainError);
}
