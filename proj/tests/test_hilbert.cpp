#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittkernel/hilbert.hpp"

using namespace wk;

namespace {

std::vector<PlaceQ> small_places() {
    std::vector<PlaceQ> out{PlaceQ::real()};
    for (int64_t p : {2, 3, 5, 7, 11, 13}) out.push_back(PlaceQ::prime(p));
    return out;
}

} // namespace

TEST_CASE("hilbert symbol: frozen examples") {
    for (const PlaceQ& v : small_places())
        CHECK(hilbert_symbol(Rational(1), Rational(5), v) == 1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), PlaceQ::real()) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), PlaceQ::prime(2)) == -1);
    CHECK(hilbert_symbol(Rational(2), Rational(5), PlaceQ::prime(5)) == -1);
    CHECK(hilbert_symbol(Rational(-1), Rational(3), PlaceQ::prime(3)) == -1);
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), PlaceQ::real()), DomainError);
}

TEST_CASE("hilbert oracle: frozen examples") {
    CHECK(hilbert_oracle(Rational(1), Rational(1), PlaceQ::prime(3)) == 1);
    CHECK(hilbert_oracle(Rational(-1), Rational(3), PlaceQ::prime(3)) == -1);
    CHECK(hilbert_oracle(Rational(-1), Rational(3), PlaceQ::real()) == 1);
    CHECK(hilbert_oracle(Rational(-1), Rational(-1), PlaceQ::prime(2)) == -1);
}

TEST_CASE("symmetry, square invariance, bimultiplicativity") {
    std::mt19937_64 rng(17);
    auto draw = [&]() {
        int64_t n = 0;
        while (n == 0) n = static_cast<int64_t>(rng() % 81) - 40;
        return n;
    };
    for (int i = 0; i < 400; ++i) {
        Rational a(draw()), b(draw()), c(draw());
        int64_t t = static_cast<int64_t>(rng() % 9) + 1;
        for (const PlaceQ& v : small_places()) {
            int sab = hilbert_symbol(a, b, v);
            CHECK(sab == hilbert_symbol(b, a, v));
            CHECK(sab == hilbert_symbol(a * Rational(t * t), b, v));
            CHECK(hilbert_symbol(a * c, b, v) == sab * hilbert_symbol(c, b, v));
        }
    }
}

TEST_CASE("formula matches oracle on a compact window") {
    // the acceptance suite runs the full [-50,50] x primes<=50 sweep
    for (int64_t a = -12; a <= 12; ++a) {
        if (a == 0) continue;
        for (int64_t b = -12; b <= 12; ++b) {
            if (b == 0) continue;
            for (const PlaceQ& v : small_places()) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(v.to_string());
                CHECK(hilbert_symbol(Rational(a), Rational(b), v) ==
                      hilbert_oracle(Rational(a), Rational(b), v));
            }
        }
    }
}

TEST_CASE("reciprocity on frozen pairs and random input") {
    CHECK(reciprocity_check(Rational(-1), Rational(-1)));
    CHECK(reciprocity_check(Rational(1), Rational(77)));
    CHECK(reciprocity_check(Rational(-1), Rational(3)));
    // symbols of (-1,-1) are -1 exactly at {2, inf}
    std::vector<PlaceQ> ram;
    for (const PlaceQ& v : relevant_places(Rational(-1), Rational(-1)))
        if (hilbert_symbol(Rational(-1), Rational(-1), v) == -1) ram.push_back(v);
    REQUIRE(ram.size() == 2);
    CHECK(ram[0] == PlaceQ::prime(2));
    CHECK(ram[1] == PlaceQ::real());
    // (-1,3): -1 exactly at {2, 3}
    ram.clear();
    for (const PlaceQ& v : relevant_places(Rational(-1), Rational(3)))
        if (hilbert_symbol(Rational(-1), Rational(3), v) == -1) ram.push_back(v);
    REQUIRE(ram.size() == 2);
    CHECK(ram[0] == PlaceQ::prime(2));
    CHECK(ram[1] == PlaceQ::prime(3));

    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        int64_t a = 0, b = 0;
        while (a == 0) a = static_cast<int64_t>(rng() % 2001) - 1000;
        while (b == 0) b = static_cast<int64_t>(rng() % 2001) - 1000;
        int64_t d1 = static_cast<int64_t>(rng() % 40) + 1;
        int64_t d2 = static_cast<int64_t>(rng() % 40) + 1;
        CHECK(reciprocity_check(Rational(a, d1), Rational(b, d2)));
    }
}

TEST_CASE("relevant places cover numerators and denominators") {
    std::vector<PlaceQ> places = relevant_places(Rational(9, 5), Rational(-14));
    // {2, 3, 5, 7, inf}
    REQUIRE(places.size() == 5);
    CHECK(places[0] == PlaceQ::prime(2));
    CHECK(places[1] == PlaceQ::prime(3));
    CHECK(places[2] == PlaceQ::prime(5));
    CHECK(places[3] == PlaceQ::prime(7));
    CHECK(places[4] == PlaceQ::real());
}
